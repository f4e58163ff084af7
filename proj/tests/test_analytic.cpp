#include "polyred/analytic.hpp"
#include "polyred/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace polyred;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("zeta at integer arguments") {
    CHECK(std::abs(zeta_int(2).approx - kPi * kPi / 6.0) < 1e-12);
    CHECK(std::abs(zeta_int(4).approx - kPi * kPi * kPi * kPi / 90.0) < 1e-12);
    CHECK(std::abs(zeta_int(3).approx - 1.2020569031595942854) < 1e-12);

    // zeta(50) = 1 + 2^-50 + 3^-50 + ... , dominated by 1 + 2^-49
    const double z50 = zeta_int(50).approx;
    CHECK(z50 > 1.0);
    CHECK(z50 - 1.0 > 8.8e-16);
    CHECK(z50 <= 1.0 + std::ldexp(1.0, -49));

    CHECK_THROWS_AS(zeta_int(1), std::domain_error);
    CHECK_THROWS_AS(zeta_int(0), std::domain_error);
}

TEST_CASE("slab volume exact values") {
    CHECK(slab_volume(1) == 2);
    CHECK(slab_volume(2) == 3);
    CHECK_THROWS_AS(slab_volume(0), std::domain_error);
}

TEST_CASE("slab volume matches Monte Carlo") {
    // numerical oracle: fraction of the cube [-1,1]^n with |sum| <= 1
    TrialRng rng(1618);
    for (int n = 3; n <= 8; ++n) {
        const uint64_t trials = 1000000;
        uint64_t inside = 0;
        for (uint64_t t = 0; t < trials; ++t) {
            double s = 0;
            for (int i = 0; i < n; ++i)
                s += 2.0 * (static_cast<double>(rng.next()) / 18446744073709551616.0) - 1.0;
            if (std::abs(s) <= 1.0) ++inside;
        }
        const double p_exact = mpq_class(slab_volume(n) / mpq_class(mpz_class(1) << n)).get_d();
        const double p_hat = static_cast<double>(inside) / static_cast<double>(trials);
        const double sd = std::sqrt(p_exact * (1 - p_exact) / static_cast<double>(trials));
        CHECK(std::abs(p_hat - p_exact) < 3.5 * sd);
    }
}

TEST_CASE("chela constant") {
    // C_3 = 2 zeta(2) - 1 + k_3/2 = pi^2/3 + 1/2 with k_3 = 3
    CHECK(slab_volume(2) == 3);
    CHECK(std::abs(chela_constant(3).approx - (kPi * kPi / 3.0 + 0.5)) < 1e-9);

    // decreases monotonically toward 1 over [4, 60] and stays above 1
    // (the excess is O(1/sqrt(d)), so the approach is slow)
    double prev = chela_constant(3).approx;
    for (int d = 4; d <= 60; ++d) {
        const double c = chela_constant(d).approx;
        CHECK(c > 1.0);
        CHECK(c < prev);
        prev = c;
    }
    CHECK(prev - 1.0 < 2.0 * std::sqrt(6.0 / (kPi * 59))); // k_d tail estimate

    CHECK_THROWS_AS(chela_constant(2), std::domain_error);
}

TEST_CASE("zero-one linear factor probability") {
    CHECK(*zero_one_linear_prob(3).exact == mpq_class(1, 2));
    CHECK(*zero_one_linear_prob(4).exact == mpq_class(1, 8));
    CHECK(*zero_one_linear_prob(2).exact == 0);
    // d = 21: C(20,10)/2^20
    mpq_class expect21(binomial(20, 10), mpz_class(1) << 20);
    expect21.canonicalize();
    CHECK(*zero_one_linear_prob(21).exact == expect21);
    CHECK_THROWS_AS(zero_one_linear_prob(1), std::domain_error);

    // probability * sqrt(pi d / 2) -> 1; within 2% at d = 501 and improving
    // along both parities
    auto ratio = [](int d) {
        return zero_one_linear_prob(d).exact->get_d() * std::sqrt(kPi * d / 2.0);
    };
    CHECK(std::abs(ratio(501) - 1.0) < 0.02);
    CHECK(std::abs(ratio(500) - 1.0) < 0.02);
    double prev_odd = ratio(5), prev_even = ratio(6);
    for (int d = 7; d <= 501; d += 2) {
        const double r = ratio(d);
        CHECK(std::abs(r - 1.0) < std::abs(prev_odd - 1.0) + 1e-12);
        prev_odd = r;
    }
    for (int d = 8; d <= 500; d += 2) {
        const double r = ratio(d);
        CHECK(std::abs(r - 1.0) < std::abs(prev_even - 1.0) + 1e-12);
        prev_even = r;
    }
}

TEST_CASE("pm1 linear counts") {
    auto v3 = pm1_linear_counts(3);
    CHECK(v3.count == 4);
    CHECK(v3.probability == mpq_class(1, 2));

    auto v5 = pm1_linear_counts(5);
    CHECK(v5.count == 20);
    CHECK(v5.probability == mpq_class(5, 8));

    auto v7 = pm1_linear_counts(7);
    CHECK(v7.count == 52);

    CHECK_THROWS_AS(pm1_linear_counts(4), std::domain_error);
    CHECK_THROWS_AS(pm1_linear_counts(8), std::domain_error);

    // probability / main term -> 1 over odd d. The -4/(pi(d+1)) correction
    // matches the overlap subtraction of the d = 3 mod 4 class exactly, so
    // that class converges fast; the d = 1 mod 4 class has no overlap and
    // approaches 1 only at O(1/sqrt(d)). Test the trend per residue class.
    auto rel = [](int d) {
        auto v = pm1_linear_counts(d);
        return v.probability.get_d() / v.main_term;
    };
    CHECK(std::abs(rel(501) - 1.0) < 0.05);
    CHECK(std::abs(rel(499) - 1.0) < 0.005);
    CHECK(std::abs(rel(5) - 1.0) < 0.5);
    // 1 mod 4: positive deviation, monotone decreasing
    double prev = std::abs(rel(5) - 1.0);
    for (int d = 9; d <= 501; d += 4) {
        const double e = std::abs(rel(d) - 1.0);
        CHECK(e < prev + 1e-12);
        prev = e;
    }
    // 3 mod 4: the correction matches the overlap, so the deviation is small
    // throughout (it oscillates around zero while shrinking)
    for (int d = 11; d <= 503; d += 4) CHECK(std::abs(rel(d) - 1.0) < 0.01);
}

TEST_CASE("matrix singularity bound") {
    auto b2 = matrix_singularity_lower_bound(2);
    CHECK(b2.prop5 == mpq_class(1, 2));
    CHECK(b2.main_term == 1);

    auto b3 = matrix_singularity_lower_bound(3);
    CHECK(b3.prop5 == mpq_class(3, 8));

    CHECK_THROWS_AS(matrix_singularity_lower_bound(1), std::domain_error);

    // the second-order term is o of the first
    auto b40 = matrix_singularity_lower_bound(40);
    CHECK(std::abs(mpq_class(b40.prop5 / b40.main_term).get_d() - 1.0) < 1e-6);
}
