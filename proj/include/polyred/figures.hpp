#pragma once

#include "polyred/models.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace polyred {

/// One plotted series of a figure: a model family swept over degrees at fixed
/// K, either Monte Carlo (trials > 0) or exhaustive (trials == 0).
struct FigureSeries {
    std::string name;
    ModelFamily family = ModelFamily::ZeroOneFixedEnds;
    int support = 0;
    std::vector<int> degrees;
    uint64_t trials = 0; // 0 => exhaustive enumeration
    double sigma = 5.0;
    std::string marker = "circle"; // circle | square
};

/// A reproduction job for one of the built-in figures. Trial counts are
/// parameters of the run, not claims about how the figure was first made.
struct FigureJob {
    std::string figure_id;
    std::string title;
    std::string y_label;
    bool ratio = false; // y is P(reducible)/baseline instead of P(reducible)
    bool log_y = false;
    std::string overlay; // analytic overlay id ("" = none): p1-main, pm1-main,
                         // chela, matrix-bound, one
    std::vector<FigureSeries> series;
};

/// One CSV row / plotted point.
struct FigureRow {
    std::string figure_id;
    std::string series;
    int degree = 0;
    int support = 0;
    uint64_t trials = 0; // support size for exhaustive rows
    uint64_t reducible_count = 0;
    uint64_t linear_count = 0;
    uint64_t const_zero_count = 0;
    double p_hat = 0.0;
    double ci_halfwidth = 0.0; // on p_hat; 0 for exhaustive rows
    double ratio = 0.0;        // NaN when the model has no baseline
    double overlay = 0.0;      // NaN when no overlay applies at this degree
    double sigma = 5.0;
    uint64_t seed = 0;
    bool exhaustive = false;
};

const std::vector<std::string>& figure_ids();

/// Builds the job for a figure id. trials_override > 0 replaces every Monte
/// Carlo series' trial count; paper_scale switches from the desk-scale
/// defaults to the full-scale counts documented in the job table.
/// Unknown ids throw std::invalid_argument.
FigureJob figure_job(const std::string& id, uint64_t trials_override = 0,
                     bool paper_scale = false);

/// Runs every series point. Per-point seeds derive from (seed, series index,
/// degree), so output is deterministic for fixed (job, seed, workers) and
/// identical across worker counts.
std::vector<FigureRow> run_figure(const FigureJob& job, uint64_t seed, int workers);

void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows);
void write_figure_svg(std::ostream& out, const FigureJob& job,
                      const std::vector<FigureRow>& rows);

} // namespace polyred
