#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyred {

/// Integer-coefficient polynomial in one variable, exact arithmetic.
///
/// Coefficients are stored constant term first, so index = exponent, and are
/// kept in canonical trimmed form: the last stored coefficient is nonzero
/// unless the polynomial is zero (empty vector). Values are immutable after
/// construction in the sense that no operation mutates its inputs; sharing
/// across threads is safe.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    IntPolynomial(std::initializer_list<long> constant_first) {
        coeffs_.reserve(constant_first.size());
        for (long c : constant_first) coeffs_.emplace_back(c);
        trim();
    }

    /// c * x^degree
    static IntPolynomial monomial(int degree, mpz_class c = 1);

    /// Parses the comma-separated text form, constant term first
    /// ("1,1,0,1" is x^3+x+1). Throws std::invalid_argument on empty input
    /// or any non-integer token.
    static IntPolynomial parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the degree.
    const mpz_class& coeff(int i) const;

    const mpz_class& leading() const;
    const mpz_class& constant() const;

    std::span<const mpz_class> coeffs() const { return coeffs_; }

    mpz_class evaluate(const mpz_class& x) const;

    IntPolynomial derivative() const;

    /// (content, primitive part). Content is the positive gcd of the
    /// coefficients; the primitive part keeps the sign, so
    /// content * primitive == *this. Throws std::domain_error on zero input.
    std::pair<mpz_class, IntPolynomial> content_and_primitive() const;

    /// Exact division over Z: returns the quotient iff divisor divides *this
    /// exactly, nullopt otherwise. Divisor must be nonzero.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const mpz_class& c) const;

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    /// p(-x)
    IntPolynomial substitute_neg_x() const;

    /// x^deg * p(1/x): coefficient reversal. Meaningful for nonzero constant term.
    IntPolynomial reversed() const;

    /// Sum of squared coefficients (norm squared).
    mpz_class l2_norm_squared() const;

    /// Comma-separated integers, constant term first.
    std::string to_text() const;

    /// Human form, highest power first, e.g. "x^3 + x + 1".
    std::string to_pretty() const;

    /// Stable content hash; drives the derandomized seeds inside factorint.
    uint64_t hash() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<mpz_class> coeffs_;
};

/// Primitive positive-leading-coefficient gcd of the primitive parts of a and
/// b (subresultant PRS). gcd(p, 0) = primitive part of p, sign-normalized.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Ordering used for deterministic factor lists: degree first, then
/// lexicographic on the coefficient sequence (constant term first).
bool poly_less(const IntPolynomial& a, const IntPolynomial& b);

} // namespace polyred
