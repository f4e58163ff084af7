#include "polyred/exhaustive.hpp"

#include "polyred/factorint.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

namespace polyred {

namespace {

// Per-worker accumulator. Uniform families count events and scale once at the
// end; the binomial family accumulates rational masses directly.
struct Accumulator {
    bool weighted = false;
    // unweighted counts
    uint64_t total = 0, reducible = 0, linear = 0, const_zero = 0;
    std::map<int, uint64_t> histogram;
    // weighted masses
    mpq_class w_reducible, w_linear, w_const_zero;
    std::map<int, mpq_class> w_histogram;

    void add(const IntPolynomial& poly, const mpq_class& weight, const FactorReport& rep) {
        ++total;
        if (weighted) {
            if (rep.is_reducible) w_reducible += weight;
            if (rep.min_factor_degree == 1) w_linear += weight;
            if (poly.constant() == 0) w_const_zero += weight;
            w_histogram[rep.min_factor_degree] += weight;
        } else {
            if (rep.is_reducible) ++reducible;
            if (rep.min_factor_degree == 1) ++linear;
            if (poly.constant() == 0) ++const_zero;
            ++histogram[rep.min_factor_degree];
        }
    }

    void merge(const Accumulator& o) {
        total += o.total;
        reducible += o.reducible;
        linear += o.linear;
        const_zero += o.const_zero;
        for (const auto& [k, v] : o.histogram) histogram[k] += v;
        w_reducible += o.w_reducible;
        w_linear += o.w_linear;
        w_const_zero += o.w_const_zero;
        for (const auto& [k, v] : o.w_histogram) w_histogram[k] += v;
    }
};

Accumulator exact_range(const ModelSpec& spec, uint64_t lo, uint64_t hi, bool weighted) {
    Accumulator acc;
    acc.weighted = weighted;
    enumerate_range(spec, lo, hi, [&](const IntPolynomial& poly, const mpq_class& w) {
        acc.add(poly, w, factor(poly));
    });
    return acc;
}

} // namespace

ExactStats exact(const ModelSpec& spec, int workers, uint64_t cap) {
    spec.validate();
    const mpz_class n = support_size(spec);
    if (n > cap)
        throw std::length_error("support size " + n.get_str() + " exceeds enumeration cap " +
                                std::to_string(cap));
    const uint64_t total = n.get_ui();
    const bool weighted = spec.family == ModelFamily::MonicBinomial;

    const uint64_t w = std::max<uint64_t>(
        1, std::min<uint64_t>(static_cast<uint64_t>(std::max(workers, 1)), total));
    std::vector<Accumulator> parts(w);
    if (w == 1) {
        parts[0] = exact_range(spec, 0, total, weighted);
    } else {
        std::vector<std::exception_ptr> errors(w);
        std::vector<std::thread> threads;
        const uint64_t chunk = total / w;
        const uint64_t extra = total % w;
        uint64_t lo = 0;
        for (uint64_t t = 0; t < w; ++t) {
            const uint64_t hi = lo + chunk + (t < extra ? 1 : 0);
            threads.emplace_back([&, t, lo, hi] {
                try {
                    parts[t] = exact_range(spec, lo, hi, weighted);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
            lo = hi;
        }
        for (auto& th : threads) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (uint64_t t = 1; t < w; ++t) parts[0].merge(parts[t]);
    }

    const Accumulator& acc = parts[0];
    ExactStats out;
    out.model = spec;
    out.support = n;
    if (weighted) {
        out.reducible_prob = acc.w_reducible;
        out.linear_factor_prob = acc.w_linear;
        out.constant_zero_prob = acc.w_const_zero;
        out.min_degree_histogram = acc.w_histogram;
    } else {
        const mpq_class inv_n(1, n);
        auto scale = [&](uint64_t c) {
            mpq_class q = mpq_class(static_cast<unsigned long>(c)) * inv_n;
            q.canonicalize();
            return q;
        };
        out.reducible_prob = scale(acc.reducible);
        out.linear_factor_prob = scale(acc.linear);
        out.constant_zero_prob = scale(acc.const_zero);
        for (const auto& [k, v] : acc.histogram) out.min_degree_histogram[k] = scale(v);
    }
    return out;
}

mpq_class conditional_linear_given_reducible(const ExactStats& stats) {
    if (stats.reducible_prob == 0)
        throw std::domain_error("conditioning on reducibility, which has probability zero");
    mpq_class q = stats.linear_factor_prob / stats.reducible_prob;
    q.canonicalize();
    return q;
}

mpq_class conditional_linear_given_reducible(const ModelSpec& spec, int workers, uint64_t cap) {
    return conditional_linear_given_reducible(exact(spec, workers, cap));
}

} // namespace polyred
