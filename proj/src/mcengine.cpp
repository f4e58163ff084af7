#include "polyred/mcengine.hpp"

#include "polyred/analytic.hpp"
#include "polyred/factorint.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace polyred {

namespace {

TrialStats run_range(const ModelSpec& spec, uint64_t lo, uint64_t hi, uint64_t seed) {
    TrialStats s;
    s.model = spec;
    s.seed = seed;
    for (uint64_t i = lo; i < hi; ++i) {
        TrialRng rng(seed, i);
        const IntPolynomial poly = sample(spec, rng);
        const FactorReport rep = factor(poly);
        ++s.trials;
        if (rep.is_reducible) ++s.reducible;
        if (rep.min_factor_degree == 1) ++s.linear_factor;
        if (poly.constant() == 0) ++s.constant_zero;
        ++s.min_degree_histogram[rep.min_factor_degree];
    }
    return s;
}

} // namespace

TrialStats run(const ModelSpec& spec, uint64_t trials, uint64_t seed, int workers) {
    spec.validate();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");

    const uint64_t w = std::min<uint64_t>(static_cast<uint64_t>(workers), trials);
    if (w == 1) return run_range(spec, 0, trials, seed);

    std::vector<TrialStats> parts(w);
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> threads;
    threads.reserve(w);
    const uint64_t chunk = trials / w;
    const uint64_t extra = trials % w;
    uint64_t lo = 0;
    for (uint64_t t = 0; t < w; ++t) {
        const uint64_t hi = lo + chunk + (t < extra ? 1 : 0);
        threads.emplace_back([&, t, lo, hi] {
            try {
                parts[t] = run_range(spec, lo, hi, seed);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& th : threads) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    TrialStats total = std::move(parts[0]);
    for (uint64_t t = 1; t < w; ++t) total = merge(total, parts[t]);
    return total;
}

ConfidenceInterval confidence_for_count(uint64_t count, uint64_t trials, double z,
                                        CiMethod method) {
    if (trials < 1) throw std::invalid_argument("confidence needs trials >= 1");
    if (z <= 0) throw std::invalid_argument("confidence needs z > 0");
    ConfidenceInterval ci;
    ci.sigma_level = z;
    ci.method = method;
    const double t = static_cast<double>(trials);
    ci.point = static_cast<double>(count) / t;
    if (method == CiMethod::Conservative) {
        ci.halfwidth = z / (2.0 * std::sqrt(t));
    } else {
        ci.halfwidth = z * std::sqrt(ci.point * (1.0 - ci.point) / t);
    }
    return ci;
}

ConfidenceInterval confidence(const TrialStats& stats, double z, CiMethod method) {
    return confidence_for_count(stats.reducible, stats.trials, z, method);
}

mpq_class heuristic_baseline(const ModelSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case ModelFamily::ZeroOneFixedEnds:
            return *zero_one_linear_prob(spec.degree).exact;
        case ModelFamily::PlusMinusOne:
            if (spec.degree % 2 == 0)
                throw std::domain_error(
                    "even-degree +-1 polynomials admit no linear factor; use the "
                    "min-degree histogram instead of a ratio");
            return pm1_linear_counts(spec.degree).probability;
        case ModelFamily::CharPolyPM1:
            return matrix_singularity_lower_bound(spec.degree).prop5;
        default:
            return baseline_event_probability(spec);
    }
}

ConfidenceInterval heuristic_ratio(const TrialStats& stats, double z, CiMethod method) {
    const mpq_class baseline = heuristic_baseline(stats.model);
    if (baseline <= 0)
        throw std::domain_error("heuristic baseline is zero for this model");
    ConfidenceInterval ci = confidence(stats, z, method);
    const double inv = mpq_class(1 / baseline).get_d();
    ci.point *= inv;
    ci.halfwidth *= inv;
    return ci;
}

TrialStats merge(const TrialStats& a, const TrialStats& b) {
    const ModelSpec neutral{};
    if (a.trials == 0 && a.model == neutral) return b;
    if (b.trials == 0 && b.model == neutral) return a;
    if (!(a.model == b.model))
        throw std::invalid_argument("cannot merge TrialStats for different models");
    TrialStats out = a;
    out.trials += b.trials;
    out.reducible += b.reducible;
    out.linear_factor += b.linear_factor;
    out.constant_zero += b.constant_zero;
    for (const auto& [deg, count] : b.min_degree_histogram)
        out.min_degree_histogram[deg] += count;
    return out;
}

} // namespace polyred
