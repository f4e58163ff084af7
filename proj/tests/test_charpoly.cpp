#include "polyred/charpoly.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace polyred;

namespace {

SignMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    SignMatrix m(static_cast<int>(rows.size()));
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (int v : row) m.set(r, c++, v);
        ++r;
    }
    return m;
}

} // namespace

TEST_CASE("characteristic polynomial examples") {
    CHECK(characteristic_polynomial(from_rows({{1, 1}, {1, 1}})) == IntPolynomial({0, -2, 1}));
    CHECK(characteristic_polynomial(from_rows({{1, 1}, {1, -1}})) == IntPolynomial({-2, 0, 1}));
    CHECK(characteristic_polynomial(from_rows({{1}})) == IntPolynomial({-1, 1}));
    CHECK(characteristic_polynomial(from_rows({{-1}})) == IntPolynomial({1, 1}));
}

TEST_CASE("determinant examples") {
    CHECK(determinant(from_rows({{1, 1}, {1, 1}})) == 0);
    CHECK(determinant(from_rows({{1, 1}, {1, -1}})) == -2);

    // exhaustive d=2: exactly 8 of 16 matrices are singular
    int singular = 0;
    for (uint64_t idx = 0; idx < 16; ++idx)
        if (determinant(matrix_from_index(2, idx)) == 0) ++singular;
    CHECK(singular == 8);
}

TEST_CASE("char poly agrees with trace and Bareiss determinant") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        TrialRng rng(1234, seed);
        const int d = 1 + static_cast<int>(rng.below(8));
        const SignMatrix m = sample_matrix(d, rng);
        const IntPolynomial chi = characteristic_polynomial(m);
        CHECK(chi.degree() == d);
        CHECK(chi.leading() == 1);

        long trace = 0;
        for (int i = 0; i < d; ++i) trace += m.entry(i, i);
        CHECK(chi.coeff(d - 1) == -trace);

        // chi(0) = (-1)^d det(M), cross-checked against Bareiss
        mpz_class det = determinant(m);
        CHECK(chi.evaluate(0) == (d % 2 == 0 ? det : mpz_class(-det)));
    }
}

TEST_CASE("permutation conjugation leaves the char poly unchanged") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        TrialRng rng(99, seed);
        const int d = 2 + static_cast<int>(rng.below(6));
        const SignMatrix m = sample_matrix(d, rng);

        std::vector<int> perm(static_cast<size_t>(d));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = d - 1; i > 0; --i)
            std::swap(perm[static_cast<size_t>(i)],
                      perm[rng.below(static_cast<uint64_t>(i) + 1)]);

        SignMatrix conj(d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                conj.set(r, c, m.entry(perm[static_cast<size_t>(r)], perm[static_cast<size_t>(c)]));
        CHECK(characteristic_polynomial(conj) == characteristic_polynomial(m));
    }
}

TEST_CASE("entry symmetry") {
    // empirical mean entry over 10^5 draws at d=5 is 0 within 5 sigma
    const uint64_t n = 100000;
    long long sum = 0;
    for (uint64_t i = 0; i < n; ++i) {
        TrialRng rng(31415, i);
        const SignMatrix m = sample_matrix(5, rng);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) sum += m.entry(r, c);
    }
    const double sd = std::sqrt(25.0 * static_cast<double>(n));
    CHECK(std::abs(static_cast<double>(sum)) < 5 * sd);
}

TEST_CASE("d=1 matrices are uniform on {+1, -1}") {
    uint64_t plus = 0;
    const uint64_t n = 100000;
    for (uint64_t i = 0; i < n; ++i) {
        TrialRng rng(7, i);
        if (sample_matrix(1, rng).entry(0, 0) == 1) ++plus;
    }
    CHECK(std::abs(static_cast<double>(plus) - n / 2.0) < 5 * std::sqrt(n * 0.25));
}
