#pragma once

#include "polyred/models.hpp"

#include <map>

namespace polyred {

/// Exact event probabilities from full enumeration of a model's support.
struct ExactStats {
    ModelSpec model;
    mpz_class support;
    mpq_class reducible_prob;
    mpq_class linear_factor_prob; // min_factor_degree == 1
    mpq_class constant_zero_prob;
    std::map<int, mpq_class> min_degree_histogram; // smallest factor degree -> mass
};

/// Factors every support element once and accumulates exact rational event
/// masses (they sum to 1). Support is partitioned across workers; the
/// reduction is associative so the result is worker-count independent.
/// Throws std::length_error stating the exact support size when it exceeds
/// `cap`.
ExactStats exact(const ModelSpec& spec, int workers = 1, uint64_t cap = uint64_t{1} << 30);

/// linear_factor_prob / reducible_prob. Throws std::domain_error when
/// reducible_prob == 0 (conditioning on a null event).
mpq_class conditional_linear_given_reducible(const ExactStats& stats);
mpq_class conditional_linear_given_reducible(const ModelSpec& spec, int workers = 1,
                                             uint64_t cap = uint64_t{1} << 30);

} // namespace polyred
