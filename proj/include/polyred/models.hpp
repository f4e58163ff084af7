#pragma once

#include "polyred/bigpoly.hpp"
#include "polyred/rng.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace polyred {

/// The random polynomial ensembles under study.
enum class ModelFamily {
    ZeroOneFixedEnds,    // monic, constant 1, interior coefficients in {0,1}
    ZeroOneFreeConstant, // monic, all lower coefficients in {0,1}
    PlusMinusOne,        // monic, all lower coefficients in {-1,+1}
    MonicUniformSym,     // monic, coefficients uniform in [-K,K]
    MonicUniformNonneg,  // monic, coefficients uniform in [0,K]
    NonMonicUniform,     // all coefficients uniform in [-K,K], lead nonzero
    MonicBinomial,       // monic, coefficients Bin(K, 1/K) on [0,K]
    CharPolyPM1,         // characteristic polynomial of a d x d +-1 matrix
};

/// Closed description of one ensemble: family, degree (matrix dimension for
/// CharPolyPM1), and the support parameter K for the three K-families.
struct ModelSpec {
    ModelFamily family = ModelFamily::ZeroOneFixedEnds;
    int degree = 1;
    int support = 0; // K; 0 for the fixed-support families

    bool operator==(const ModelSpec&) const = default;

    /// Grammar: family:degree[:K], e.g. "pm1:25", "monic-sym:8:100",
    /// "binomial:10:50", "charpm1:10". Families: z1, z1-free, pm1, monic-sym,
    /// monic-nonneg, nonmonic, binomial, charpm1.
    static ModelSpec parse(std::string_view text);
    std::string to_text() const;

    /// Throws std::invalid_argument when degree or K violate the family's
    /// constraints.
    void validate() const;

    bool needs_support() const;
};

std::string family_name(ModelFamily family);

/// One draw from the ensemble. NonMonicUniform rejection-resamples until the
/// lead coefficient is nonzero; CharPolyPM1 delegates to the charpoly module.
IntPolynomial sample(const ModelSpec& spec, TrialRng& rng);

/// Exact support size (number of distinct outcomes of the coefficient tuple;
/// for CharPolyPM1 the number of matrices, 2^(d^2)).
mpz_class support_size(const ModelSpec& spec);

/// Streams every support element exactly once with its probability weight;
/// weights sum to 1 exactly. Uniform families carry equal weights,
/// MonicBinomial carries the product binomial law. Throws std::length_error
/// naming the exact support size when it exceeds `cap`.
void enumerate(const ModelSpec& spec,
               const std::function<void(const IntPolynomial&, const mpq_class&)>& sink,
               uint64_t cap = uint64_t{1} << 30);

/// Restartable sub-range of the enumeration: elements with index in
/// [begin, end) in lexicographic coefficient order. Drives the parallel
/// exhaustive engine.
void enumerate_range(const ModelSpec& spec, uint64_t begin, uint64_t end,
                     const std::function<void(const IntPolynomial&, const mpq_class&)>& sink);

/// 1 for every family except PlusMinusOne with even degree, where no linear
/// factor is possible and the lowest possible factor degree is 2.
int lowest_possible_factor_degree(const ModelSpec& spec);

/// The constant-coefficient-zero probability used as the Heuristic-1
/// denominator: 1/(2K+1) for MonicUniformSym and NonMonicUniform, 1/(K+1) for
/// MonicUniformNonneg, (1-1/K)^K for MonicBinomial, 1/2 for
/// ZeroOneFreeConstant. Families whose baseline comes from the analytic
/// module instead (ZeroOneFixedEnds, PlusMinusOne, CharPolyPM1) throw
/// std::domain_error.
mpq_class baseline_event_probability(const ModelSpec& spec);

} // namespace polyred
