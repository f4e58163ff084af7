#include "polyred/figures.hpp"

#include "polyred/analytic.hpp"
#include "polyred/exhaustive.hpp"
#include "polyred/mcengine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace polyred {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<int> range_degrees(int lo, int hi, int step = 1) {
    std::vector<int> out;
    for (int d = lo; d <= hi; d += step) out.push_back(d);
    return out;
}

// Trial counts hitting a target halfwidth hw on the ratio scale:
// T = (z / (2 hw b))^2 where b is the baseline.
uint64_t trials_for_ratio_halfwidth(double z, double hw, double baseline) {
    const double root = z / (2.0 * hw * baseline);
    return static_cast<uint64_t>(std::llround(root * root));
}

double overlay_value(const std::string& overlay, int degree) {
    if (overlay.empty()) return kNaN;
    if (overlay == "one") return 1.0;
    if (overlay == "p1-main") return zero_one_linear_main_term(degree).approx;
    if (overlay == "pm1-main")
        return degree % 2 == 1 ? pm1_linear_main_term(degree).approx : kNaN;
    if (overlay == "chela") return degree >= 3 ? chela_constant(degree).approx : kNaN;
    if (overlay == "matrix-bound") return matrix_bound_value(degree).approx;
    throw std::invalid_argument("unknown overlay: " + overlay);
}

} // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {
        "fig1-chela-lowK", "fig2-z1-low", "fig3-pm1",      "fig4-z1-high", "fig5-pm1-large",
        "fig6-zeroK",      "fig7-kuba",   "fig8-binomial", "fig9-matrix",
    };
    return ids;
}

FigureJob figure_job(const std::string& id, uint64_t trials_override, bool paper_scale) {
    FigureJob job;
    job.figure_id = id;

    auto mc = [&](std::string name, ModelFamily fam, int K, std::vector<int> degs,
                  uint64_t desk_trials, uint64_t paper_trials, double sigma,
                  std::string marker = "square") {
        FigureSeries s;
        s.name = std::move(name);
        s.family = fam;
        s.support = K;
        s.degrees = std::move(degs);
        s.trials = trials_override ? trials_override : (paper_scale ? paper_trials : desk_trials);
        s.sigma = sigma;
        s.marker = std::move(marker);
        job.series.push_back(std::move(s));
    };
    auto exhaustive_series = [&](std::string name, ModelFamily fam, std::vector<int> degs) {
        FigureSeries s;
        s.name = std::move(name);
        s.family = fam;
        s.degrees = std::move(degs);
        s.trials = 0;
        s.marker = "circle";
        job.series.push_back(std::move(s));
    };

    if (id == "fig1-chela-lowK") {
        job.title = "Reducibility ratio for monic coefficients in [-K,K]";
        job.y_label = "P(reducible) / (1/(2K+1))";
        job.ratio = true;
        job.overlay = "chela";
        // Full-scale counts derive from the published halfwidths 0.058 /
        // 0.053 / 0.251 (the original trial counts are not stated).
        mc("K=3", ModelFamily::MonicUniformSym, 3, range_degrees(3, 10), 20000,
           trials_for_ratio_halfwidth(5, 0.058, 1.0 / 7), 5);
        mc("K=10", ModelFamily::MonicUniformSym, 10, range_degrees(3, 10), 20000,
           trials_for_ratio_halfwidth(5, 0.053, 1.0 / 21), 5, "circle");
        mc("K=100", ModelFamily::MonicUniformSym, 100, range_degrees(3, 10), 20000,
           trials_for_ratio_halfwidth(5, 0.251, 1.0 / 201), 5, "triangle");
    } else if (id == "fig2-z1-low") {
        job.title = "Reducibility of 0,1 polynomials (fixed ends), low degree";
        job.y_label = "P(reducible)";
        job.overlay = "p1-main";
        exhaustive_series("exact", ModelFamily::ZeroOneFixedEnds, range_degrees(2, 20));
        mc("sampled", ModelFamily::ZeroOneFixedEnds, 0, range_degrees(2, 25), 20000, 1000000, 5);
    } else if (id == "fig3-pm1") {
        job.title = "Reducibility of +-1 polynomials";
        job.y_label = "P(reducible)";
        job.overlay = "pm1-main";
        mc("sampled", ModelFamily::PlusMinusOne, 0, range_degrees(2, 30), 20000, 150000000, 5);
    } else if (id == "fig4-z1-high") {
        job.title = "Reducibility of 0,1 polynomials (fixed ends), high degree";
        job.y_label = "P(reducible)";
        job.overlay = "p1-main";
        mc("sampled", ModelFamily::ZeroOneFixedEnds, 0,
           paper_scale ? range_degrees(30, 300, 30) : range_degrees(30, 150, 30), 1000, 10000, 2);
    } else if (id == "fig5-pm1-large") {
        job.title = "Reducibility of +-1 polynomials, high degree";
        job.y_label = "P(reducible)";
        job.overlay = "pm1-main";
        std::vector<int> degs;
        for (int d = 31; d <= (paper_scale ? 271 : 121); d += 30) {
            degs.push_back(d);
            degs.push_back(d + 1);
        }
        mc("sampled", ModelFamily::PlusMinusOne, 0, std::move(degs), 1000, 10000, 2);
    } else if (id == "fig6-zeroK") {
        job.title = "Reducibility ratio for monic coefficients in [0,K]";
        job.y_label = "P(reducible) / (1/(K+1))";
        job.ratio = true;
        job.overlay = "one";
        for (int K : {1, 10, 100}) {
            const uint64_t paper = static_cast<uint64_t>(2500) * K * K;
            mc("K=" + std::to_string(K), ModelFamily::MonicUniformNonneg, K, range_degrees(2, 15),
               std::min<uint64_t>(paper, 50000), paper, 5,
               K == 1 ? "circle" : (K == 10 ? "square" : "triangle"));
        }
    } else if (id == "fig7-kuba") {
        job.title = "Reducibility ratio for non-monic coefficients in [-K,K]";
        job.y_label = "P(reducible) / (1/(2K+1))";
        job.ratio = true;
        job.overlay = "one";
        for (int K : {10, 50, 100, 500}) {
            const uint64_t paper = static_cast<uint64_t>(2500) * K * K;
            mc("K=" + std::to_string(K), ModelFamily::NonMonicUniform, K, range_degrees(3, 30),
               std::min<uint64_t>(paper, 50000), paper, 5);
        }
    } else if (id == "fig8-binomial") {
        job.title = "Reducibility ratio for monic Bin(K,1/K) coefficients";
        job.y_label = "P(reducible) / (1-1/K)^K";
        job.ratio = true;
        job.overlay = "one";
        const double bases[] = {std::pow(0.9, 10), std::pow(29.0 / 30, 30), std::pow(0.98, 50)};
        const double hws[] = {0.0017, 0.0006, 0.0004};
        const int ks[] = {10, 30, 50};
        for (int i = 0; i < 3; ++i)
            mc("K=" + std::to_string(ks[i]), ModelFamily::MonicBinomial, ks[i],
               range_degrees(3, 15), 50000, trials_for_ratio_halfwidth(5, hws[i], bases[i]), 5);
    } else if (id == "fig9-matrix") {
        job.title = "Reducibility of characteristic polynomials of +-1 matrices";
        job.y_label = "P(reducible)";
        job.overlay = "matrix-bound";
        job.log_y = true;
        if (paper_scale) {
            mc("d<=20", ModelFamily::CharPolyPM1, 0, range_degrees(2, 20), 5000, 1000000, 5,
               "circle");
            mc("d>20", ModelFamily::CharPolyPM1, 0, range_degrees(21, 46), 1000, 100000, 5);
        } else {
            mc("sampled", ModelFamily::CharPolyPM1, 0, range_degrees(2, 16), 5000, 1000000, 5,
               "circle");
        }
    } else {
        throw std::invalid_argument("unknown figure id: " + id);
    }
    return job;
}

std::vector<FigureRow> run_figure(const FigureJob& job, uint64_t seed, int workers) {
    std::vector<FigureRow> rows;
    for (size_t si = 0; si < job.series.size(); ++si) {
        const FigureSeries& s = job.series[si];
        for (int d : s.degrees) {
            ModelSpec spec{s.family, d, s.support};
            spec.validate();
            FigureRow row;
            row.figure_id = job.figure_id;
            row.series = s.name;
            row.degree = d;
            row.support = s.support;
            row.sigma = s.sigma;
            row.overlay = overlay_value(job.overlay, d);

            mpq_class baseline = 0;
            bool has_baseline = true;
            try {
                baseline = heuristic_baseline(spec);
            } catch (const std::domain_error&) {
                has_baseline = false;
            }

            if (s.trials == 0) {
                ExactStats ex = exact(spec, workers);
                row.exhaustive = true;
                row.trials = ex.support.get_ui();
                // counts are integral for the uniform families plotted exactly
                auto to_count = [&](const mpq_class& prob) {
                    mpq_class q = prob * mpq_class(ex.support);
                    mpz_class c;
                    mpz_divexact(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
                    return c.get_ui();
                };
                row.reducible_count = to_count(ex.reducible_prob);
                row.linear_count = to_count(ex.linear_factor_prob);
                row.const_zero_count = to_count(ex.constant_zero_prob);
                row.p_hat = ex.reducible_prob.get_d();
                row.ci_halfwidth = 0.0;
                row.seed = 0;
            } else {
                const uint64_t point_seed = mix64(seed ^ mix64(si * 1000003 + static_cast<uint64_t>(d)));
                TrialStats st = run(spec, s.trials, point_seed, workers);
                row.trials = st.trials;
                row.reducible_count = st.reducible;
                row.linear_count = st.linear_factor;
                row.const_zero_count = st.constant_zero;
                const ConfidenceInterval ci = confidence(st, s.sigma);
                row.p_hat = ci.point;
                row.ci_halfwidth = ci.halfwidth;
                row.seed = point_seed;
            }
            row.ratio = (has_baseline && baseline > 0) ? row.p_hat / baseline.get_d() : kNaN;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

std::string fmt(double v) {
    if (std::isnan(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace

void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows) {
    out << "figure_id,series,degree,K,trials,reducible_count,linear_count,const_zero_count,"
           "p_hat,ci_halfwidth,ratio,analytic_overlay,sigma,seed,exhaustive\n";
    for (const auto& r : rows) {
        out << r.figure_id << ',' << r.series << ',' << r.degree << ',' << r.support << ','
            << r.trials << ',' << r.reducible_count << ',' << r.linear_count << ','
            << r.const_zero_count << ',' << fmt(r.p_hat) << ',' << fmt(r.ci_halfwidth) << ','
            << fmt(r.ratio) << ',' << fmt(r.overlay) << ',' << fmt(r.sigma) << ',' << r.seed
            << ',' << (r.exhaustive ? 1 : 0) << '\n';
    }
}

// ---------------------------------------------------------------------------
// SVG emission: self-contained, no external assets.
// ---------------------------------------------------------------------------

namespace {

struct Scale {
    double lo, hi;
    double px_lo, px_hi;
    bool log = false;
    double operator()(double v) const {
        const double t = log ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo))
                             : (v - lo) / (hi - lo);
        return px_lo + t * (px_hi - px_lo);
    }
};

const char* series_color(size_t i) {
    static const char* palette[] = {"#1f6feb", "#d1242f", "#1a7f37", "#9a6700", "#8250df"};
    return palette[i % 5];
}

void draw_marker(std::ostream& out, const std::string& marker, double x, double y,
                 const char* color) {
    if (marker == "square") {
        out << "<rect x='" << x - 3.5 << "' y='" << y - 3.5
            << "' width='7' height='7' fill='" << color << "'/>\n";
    } else if (marker == "triangle") {
        out << "<path d='M " << x << ' ' << y - 4.5 << " L " << x - 4 << ' ' << y + 3.5 << " L "
            << x + 4 << ' ' << y + 3.5 << " Z' fill='" << color << "'/>\n";
    } else {
        out << "<circle cx='" << x << "' cy='" << y << "' r='3.5' fill='" << color << "'/>\n";
    }
}

} // namespace

void write_figure_svg(std::ostream& out, const FigureJob& job,
                      const std::vector<FigureRow>& rows) {
    constexpr double W = 960, H = 640, ML = 80, MR = 200, MT = 50, MB = 60;

    auto row_y = [&](const FigureRow& r) { return job.ratio ? r.ratio : r.p_hat; };
    auto row_hw = [&](const FigureRow& r) {
        if (!job.ratio) return r.ci_halfwidth;
        return (r.p_hat > 0 && !std::isnan(r.ratio)) ? r.ci_halfwidth * (r.ratio / r.p_hat) : 0.0;
    };

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& r : rows) {
        xmin = std::min(xmin, static_cast<double>(r.degree));
        xmax = std::max(xmax, static_cast<double>(r.degree));
        const double y = row_y(r);
        if (!std::isnan(y)) {
            ymin = std::min(ymin, y - row_hw(r));
            ymax = std::max(ymax, y + row_hw(r));
        }
        if (!std::isnan(r.overlay)) {
            ymin = std::min(ymin, r.overlay);
            ymax = std::max(ymax, r.overlay);
        }
    }
    if (xmin > xmax) { xmin = 0; xmax = 1; }
    if (ymin > ymax) { ymin = 0; ymax = 1; }
    if (job.log_y) {
        if (ymin <= 0) ymin = 1e-6;
        ymin = std::pow(10.0, std::floor(std::log10(ymin)));
        ymax = std::pow(10.0, std::ceil(std::log10(std::max(ymax, ymin * 10))));
    } else {
        const double pad = 0.05 * (ymax - ymin + 1e-12);
        ymin = std::max(0.0, ymin - pad);
        ymax += pad;
    }
    const double xpad = std::max(0.5, 0.03 * (xmax - xmin));
    Scale sx{xmin - xpad, xmax + xpad, ML, W - MR, false};
    Scale sy{ymin, ymax, H - MB, MT, job.log_y};

    out << "<?xml version='1.0' encoding='UTF-8'?>\n";
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
        << "' viewBox='0 0 " << W << ' ' << H << "'>\n";
    out << "<rect width='" << W << "' height='" << H << "' fill='white'/>\n";
    out << "<text x='" << W / 2 << "' y='24' text-anchor='middle' font-family='sans-serif' "
           "font-size='16'>" << job.title << "</text>\n";

    // axes
    out << "<line x1='" << ML << "' y1='" << H - MB << "' x2='" << W - MR << "' y2='" << H - MB
        << "' stroke='black'/>\n";
    out << "<line x1='" << ML << "' y1='" << MT << "' x2='" << ML << "' y2='" << H - MB
        << "' stroke='black'/>\n";

    // x ticks at integer degrees
    const int xticks = 10;
    const int xstep = std::max(1, static_cast<int>(std::ceil((xmax - xmin) / xticks)));
    for (int d = static_cast<int>(std::ceil(xmin)); d <= static_cast<int>(xmax); d += xstep) {
        const double x = sx(d);
        out << "<line x1='" << x << "' y1='" << H - MB << "' x2='" << x << "' y2='" << H - MB + 5
            << "' stroke='black'/>\n";
        out << "<text x='" << x << "' y='" << H - MB + 20
            << "' text-anchor='middle' font-family='sans-serif' font-size='12'>" << d
            << "</text>\n";
    }
    out << "<text x='" << (ML + W - MR) / 2 << "' y='" << H - 15
        << "' text-anchor='middle' font-family='sans-serif' font-size='13'>degree</text>\n";

    // y ticks
    if (job.log_y) {
        for (double v = ymin; v <= ymax * 1.0001; v *= 10) {
            const double y = sy(v);
            out << "<line x1='" << ML - 5 << "' y1='" << y << "' x2='" << ML << "' y2='" << y
                << "' stroke='black'/>\n";
            out << "<line x1='" << ML << "' y1='" << y << "' x2='" << W - MR << "' y2='" << y
                << "' stroke='#dddddd'/>\n";
            out << "<text x='" << ML - 8 << "' y='" << y + 4
                << "' text-anchor='end' font-family='sans-serif' font-size='12'>" << fmt(v)
                << "</text>\n";
        }
    } else {
        for (int i = 0; i <= 6; ++i) {
            const double v = ymin + (ymax - ymin) * i / 6.0;
            const double y = sy(v);
            out << "<line x1='" << ML - 5 << "' y1='" << y << "' x2='" << ML << "' y2='" << y
                << "' stroke='black'/>\n";
            out << "<line x1='" << ML << "' y1='" << y << "' x2='" << W - MR << "' y2='" << y
                << "' stroke='#dddddd'/>\n";
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.4g", v);
            out << "<text x='" << ML - 8 << "' y='" << y + 4
                << "' text-anchor='end' font-family='sans-serif' font-size='12'>" << buf
                << "</text>\n";
        }
    }
    out << "<text x='20' y='" << (MT + H - MB) / 2
        << "' text-anchor='middle' font-family='sans-serif' font-size='13' transform='rotate(-90 "
           "20 " << (MT + H - MB) / 2 << ")'>" << job.y_label << "</text>\n";

    // dashed analytic overlay
    if (!job.overlay.empty()) {
        std::string path;
        bool pen_down = false;
        for (int d = static_cast<int>(std::ceil(xmin)); d <= static_cast<int>(xmax); ++d) {
            double v = kNaN;
            try {
                v = overlay_value(job.overlay, d);
            } catch (...) {
                v = kNaN;
            }
            if (std::isnan(v) || (job.log_y && v <= 0)) {
                if (job.overlay != "pm1-main") pen_down = false;
                continue;
            }
            path += (pen_down ? " L " : " M ");
            path += fmt(sx(d)) + " " + fmt(sy(std::min(std::max(v, ymin), ymax)));
            pen_down = true;
        }
        if (!path.empty())
            out << "<path d='" << path
                << "' fill='none' stroke='#444444' stroke-width='1.5' "
                   "stroke-dasharray='7,5'/>\n";
    }

    // series points with error bars
    for (size_t si = 0; si < job.series.size(); ++si) {
        const FigureSeries& s = job.series[si];
        const char* color = series_color(si);
        for (const auto& r : rows) {
            if (r.series != s.name) continue;
            const double y = row_y(r);
            if (std::isnan(y)) continue;
            const double x = sx(r.degree);
            const double hw = row_hw(r);
            if (hw > 0) {
                double y0 = y - hw, y1 = y + hw;
                if (job.log_y) y0 = std::max(y0, ymin);
                out << "<line x1='" << x << "' y1='" << sy(y0) << "' x2='" << x << "' y2='"
                    << sy(y1) << "' stroke='" << color << "' stroke-width='1'/>\n";
                out << "<line x1='" << x - 3 << "' y1='" << sy(y0) << "' x2='" << x + 3
                    << "' y2='" << sy(y0) << "' stroke='" << color << "'/>\n";
                out << "<line x1='" << x - 3 << "' y1='" << sy(y1) << "' x2='" << x + 3
                    << "' y2='" << sy(y1) << "' stroke='" << color << "'/>\n";
            }
            const double yc = job.log_y ? std::max(y, ymin) : y;
            draw_marker(out, s.marker, x, sy(yc), color);
        }
    }

    // legend
    const double lx = W - MR + 15;
    double ly = MT + 10;
    out << "<rect x='" << lx - 10 << "' y='" << ly - 18 << "' width='" << MR - 25 << "' height='"
        << 22.0 * (job.series.size() + (job.overlay.empty() ? 0 : 1)) + 14
        << "' fill='white' stroke='#999999'/>\n";
    for (size_t si = 0; si < job.series.size(); ++si) {
        draw_marker(out, job.series[si].marker, lx + 6, ly - 4, series_color(si));
        out << "<text x='" << lx + 18 << "' y='" << ly
            << "' font-family='sans-serif' font-size='12'>" << job.series[si].name
            << (job.series[si].trials == 0 ? " (exact)" : "") << "</text>\n";
        ly += 22;
    }
    if (!job.overlay.empty()) {
        out << "<line x1='" << lx - 2 << "' y1='" << ly - 4 << "' x2='" << lx + 14 << "' y2='"
            << ly - 4 << "' stroke='#444444' stroke-width='1.5' stroke-dasharray='7,5'/>\n";
        out << "<text x='" << lx + 18 << "' y='" << ly
            << "' font-family='sans-serif' font-size='12'>" << job.overlay << "</text>\n";
    }

    out << "</svg>\n";
}

} // namespace polyred
