#pragma once

#include "polyred/models.hpp"

#include <cstdint>
#include <map>

namespace polyred {

/// Mergeable event counters from a Monte Carlo run. All events for a trial
/// are derived from the one FactorReport of that trial, so the inclusion
/// relations (reducible >= linear_factor for degree >= 2, etc.) hold by
/// construction.
struct TrialStats {
    ModelSpec model;
    uint64_t trials = 0;
    uint64_t reducible = 0;
    uint64_t linear_factor = 0;  // min_factor_degree == 1
    uint64_t constant_zero = 0;
    std::map<int, uint64_t> min_degree_histogram; // smallest factor degree -> count
    uint64_t seed = 0;
};

enum class CiMethod { Conservative, Wald };

struct ConfidenceInterval {
    double point = 0.0;
    double halfwidth = 0.0;
    double sigma_level = 0.0;
    CiMethod method = CiMethod::Conservative;
};

/// Runs `trials` seeded trials of the model, factoring each draw. The result
/// is identical for fixed (spec, trials, seed) regardless of `workers`:
/// trial i's randomness is derived from (seed, i) only. Any factorization
/// failure propagates as the exception it raised.
TrialStats run(const ModelSpec& spec, uint64_t trials, uint64_t seed, int workers = 1);

/// Interval for an arbitrary event count out of `trials`.
ConfidenceInterval confidence_for_count(uint64_t count, uint64_t trials, double z,
                                        CiMethod method = CiMethod::Conservative);

/// Interval for the reducibility probability estimate.
ConfidenceInterval confidence(const TrialStats& stats, double z,
                              CiMethod method = CiMethod::Conservative);

/// The Heuristic-1 denominator for the model: the constant-coefficient-zero
/// baseline where one exists, the analytic linear-factor probability for
/// ZeroOneFixedEnds and odd-degree PlusMinusOne, and the matrix singularity
/// bound for CharPolyPM1. Even-degree PlusMinusOne throws std::domain_error
/// directing the caller to the min-degree histogram.
mpq_class heuristic_baseline(const ModelSpec& spec);

/// P(reducible) / baseline with the probability halfwidth scaled by the exact
/// reciprocal of the baseline. z defaults to five standard deviations.
ConfidenceInterval heuristic_ratio(const TrialStats& stats, double z = 5.0,
                                   CiMethod method = CiMethod::Conservative);

/// Field-wise sum. Either operand with zero trials and a default model acts
/// as the neutral element; otherwise the model specs must match
/// (std::invalid_argument).
TrialStats merge(const TrialStats& a, const TrialStats& b);

} // namespace polyred
