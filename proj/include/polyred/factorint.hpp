#pragma once

#include "polyred/bigpoly.hpp"
#include "polyred/modpoly.hpp"

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace polyred {

/// Stage of the factoring pipeline that settled the answer. Stages are
/// ordered; a report carries the deepest stage that had to run.
enum class DecisionPath { RationalRoot, SquarefreeGcd, DegreeSieve, Zassenhaus };

std::string to_string(DecisionPath path);

/// Complete factorization over Q of an integer polynomial, represented by
/// primitive integer factors with positive leading coefficients.
/// content * prod(factors[i]^multiplicity[i]) == input exactly; the content
/// carries the sign.
struct FactorReport {
    int input_degree = 0;
    mpz_class content;
    std::vector<std::pair<IntPolynomial, int>> factors; // sorted by degree, then lex
    bool is_reducible = false;
    int min_factor_degree = 0; // == input_degree when irreducible
    DecisionPath decision_path = DecisionPath::RationalRoot;
};

/// Factor p into irreducibles over Q. Requires degree >= 1
/// (throws std::domain_error otherwise). Deterministic: identical inputs give
/// identical reports.
FactorReport factor(const IntPolynomial& p);

/// Reducibility over Q, permitted to exit as early as the pipeline allows.
/// Agrees with factor(p).is_reducible.
bool is_reducible(const IntPolynomial& p);

/// All rational roots (rational-root theorem candidates, each verified by
/// exact evaluation). Requires degree >= 1.
std::vector<mpq_class> rational_roots(const IntPolynomial& p);

/// Intersection over the given primes of the subset sums of the mod-p
/// irreducible factor degrees. Always contains 0 and degree(p); equals
/// {0, degree(p)} only if p is irreducible over Q. Preconditions: p squarefree
/// and primitive behavior is the caller's concern only insofar as each prime
/// must not divide the leading coefficient and must leave p squarefree mod
/// that prime; a violating prime throws std::invalid_argument naming it.
/// The empty prime list yields {0, 1, ..., degree(p)}.
std::set<int> degree_sieve(const IntPolynomial& p, std::span<const uint64_t> primes);

/// Complete factorization mod a prime; throws std::invalid_argument when the
/// prime divides the leading coefficient. Factors are monic;
/// unit * prod(factor^multiplicity) == p mod prime, unit = lead(p) mod prime.
std::vector<ModFactor> factor_mod_p(const IntPolynomial& p, uint64_t prime);

/// Coefficient bound for any factor: 2^deg(p) * ||p||_2 * |lead(p)|
/// (rounded up). The Hensel modulus is lifted past twice this.
mpz_class factor_coefficient_bound(const IntPolynomial& p);

} // namespace polyred
