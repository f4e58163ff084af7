#pragma once

#include "polyred/bigpoly.hpp"

#include <cassert>
#include <cstdint>
#include <vector>

namespace polyred {

/// Dense polynomial over F_p for a small prime p (p < 2^31, so coefficient
/// products fit in uint64), constant term first, trimmed. Support layer for
/// the finite-field stage of factorint.
class ModPoly {
public:
    explicit ModPoly(uint64_t prime) : p_(prime) { assert(prime < (uint64_t{1} << 31)); }
    ModPoly(uint64_t prime, std::vector<uint64_t> coeffs) : p_(prime), c_(std::move(coeffs)) {
        assert(prime < (uint64_t{1} << 31));
        trim();
    }

    /// Reduction of an integer polynomial mod p.
    static ModPoly reduce(const IntPolynomial& f, uint64_t prime);

    static ModPoly x(uint64_t prime) { return ModPoly(prime, {0, 1}); }
    static ModPoly one(uint64_t prime) { return ModPoly(prime, {1}); }

    uint64_t prime() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    uint64_t coeff(int i) const {
        return (i < 0 || static_cast<size_t>(i) >= c_.size()) ? 0 : c_[static_cast<size_t>(i)];
    }
    uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly operator*(uint64_t s) const;

    ModPoly derivative() const;
    ModPoly monic() const;
    uint64_t evaluate(uint64_t x) const;

    /// Quotient and remainder; divisor leading coefficient must be invertible
    /// (always true mod a prime for a nonzero divisor).
    std::pair<ModPoly, ModPoly> divmod(const ModPoly& divisor) const;
    ModPoly mod(const ModPoly& divisor) const; // remainder only, no quotient built

    /// Lift to an integer polynomial with coefficients in [0, p).
    IntPolynomial lift() const;
    /// Lift with coefficients in the symmetric range (-p/2, p/2].
    IntPolynomial lift_symmetric() const;

    uint64_t p_inv(uint64_t a) const; // inverse mod p

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    uint64_t p_;
    std::vector<uint64_t> c_;
};

ModPoly mod_gcd(ModPoly a, ModPoly b);

/// a^e mod f, e arbitrary precision.
ModPoly mod_pow(const ModPoly& a, const mpz_class& e, const ModPoly& f);

/// Factor of multiplicity: (monic irreducible, multiplicity).
struct ModFactor {
    ModPoly factor;
    int multiplicity;
};

/// Complete factorization over F_p: squarefree decomposition, then
/// distinct-degree splitting, then equal-degree (Cantor-Zassenhaus) splitting.
/// Randomized steps draw from a generator seeded by `seed`, so the output is
/// deterministic for a fixed input. Factors come back sorted (degree, then
/// coefficient order); their product times the unit reconstructs the input.
std::vector<ModFactor> mod_factor(const ModPoly& f, uint64_t seed);

/// Degrees (with multiplicity) of the irreducible factors of a squarefree
/// monic f, via distinct-degree factorization only. Cheaper than mod_factor
/// when only the degree multiset is needed (the degree sieve).
std::vector<int> mod_factor_degrees(const ModPoly& f);

} // namespace polyred
