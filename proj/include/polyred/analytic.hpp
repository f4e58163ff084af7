#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace polyred {

/// A closed-form quantity: exact rational when one exists, double
/// approximation always (absolute error within the producing function's
/// stated precision), and a flag for asymptotic main terms that carry the
/// 1+o(1) factor.
struct AnalyticValue {
    std::string label;
    std::optional<mpq_class> exact;
    double approx = 0.0;
    bool asymptotic = false;
};

mpz_class binomial(unsigned long n, unsigned long k);

/// Exact probability that x+1 divides the {0,1} polynomial with fixed ends:
/// C(d-1, (d-1)/2) / 2^(d-1) for odd d, C(d-1, d/2-2) / 2^(d-1) for even d.
/// Requires d >= 2.
AnalyticValue zero_one_linear_prob(int d);

/// Asymptotic main term sqrt(2/(pi d)) of the probability above.
AnalyticValue zero_one_linear_main_term(int d);

/// Exact linear-factor counts for +-1 polynomials of odd degree d:
/// count = C(d+1, (d+1)/2) - overlap,
/// overlap = C((d+1)/2, (d+1)/4)^2 / 2 when d = 3 mod 4 and 0 when d = 1 mod 4;
/// probability = count / 2^d. Even d throws std::domain_error (no linear
/// factor is possible).
struct Pm1Linear {
    mpz_class count;
    mpq_class probability;
    double main_term; // 2 sqrt(2/(pi(d+1))) - 4/(pi(d+1))
};
Pm1Linear pm1_linear_counts(int d);

AnalyticValue pm1_linear_prob(int d);
AnalyticValue pm1_linear_main_term(int d);

/// Chela's limit C_d = 2 zeta(d-1) - 1 + k_d / 2^(d-2), absolute precision
/// 1e-10. Requires d >= 3.
AnalyticValue chela_constant(int d);

/// Exact volume of [-1,1]^n intersected with |x_1 + ... + x_n| <= 1
/// (the iterated integral k_{n+1}), by the Irwin-Hall alternating sum in
/// rational arithmetic. Requires n >= 1.
mpq_class slab_volume(int n);
AnalyticValue slab_volume_value(int n);

/// zeta(s) for integer s >= 2, absolute precision 1e-12 (direct summation
/// plus an Euler-Maclaurin integral tail).
AnalyticValue zeta_int(int s);

/// Matrix singularity lower bound, d >= 2:
/// prop5     = 4 C(d,2) (1/2)^d - 2 C(d,2)^2 (1/2)^d (1/2)^(d-2)
/// main_term = 4 C(d,2) (1/2)^d
/// Both are exact rationals; the o(1/2^d) correction is dropped.
struct MatrixBound {
    mpq_class prop5;
    mpq_class main_term;
};
MatrixBound matrix_singularity_lower_bound(int d);

AnalyticValue matrix_bound_value(int d);
AnalyticValue matrix_bound_main_term(int d);

} // namespace polyred
