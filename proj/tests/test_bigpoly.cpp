#include "polyred/bigpoly.hpp"
#include "polyred/rng.hpp"

#include <doctest.h>

using namespace polyred;

namespace {

IntPolynomial random_poly(TrialRng& rng, int max_deg, long lo, long hi) {
    const int d = static_cast<int>(rng.below(static_cast<uint64_t>(max_deg) + 1));
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = rng.uniform_int(lo, hi);
    return IntPolynomial(std::move(c));
}

} // namespace

TEST_CASE("parse and text round trip") {
    const IntPolynomial p = IntPolynomial::parse("1,1,0,1");
    CHECK(p.degree() == 3);
    CHECK(p.to_text() == "1,1,0,1");
    CHECK(p.to_pretty() == "x^3 + x + 1");
    CHECK(IntPolynomial::parse("-3, 2").to_text() == "-3,2");

    CHECK_THROWS_AS(IntPolynomial::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::parse("1.5"), std::invalid_argument);
}

TEST_CASE("canonical trimmed form") {
    IntPolynomial p(std::vector<mpz_class>{mpz_class(1), mpz_class(2), mpz_class(0), mpz_class(0)});
    CHECK(p.degree() == 1);
    CHECK(IntPolynomial{}.is_zero());
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(IntPolynomial{{0, 0}}.is_zero());
}

TEST_CASE("evaluate examples") {
    CHECK(IntPolynomial({1, 1, 1, 1}).evaluate(-1) == 0);
    CHECK(IntPolynomial({1, 1, 0, 1}).evaluate(1) == 3);
    CHECK(IntPolynomial({4, 0, 2}).evaluate(3) == 22);
}

TEST_CASE("multiply examples") {
    const IntPolynomial xp1({1, 1});
    const IntPolynomial xm1({-1, 1});
    CHECK(xp1 * xm1 == IntPolynomial({-1, 0, 1}));
    const IntPolynomial p({3, 0, 7, 2});
    CHECK(p * IntPolynomial({1}) == p);
    CHECK(IntPolynomial({2, 0, 1}) * IntPolynomial({2}) == IntPolynomial({4, 0, 2}));
}

TEST_CASE("derivative examples") {
    CHECK(IntPolynomial({1, 1, 0, 1}).derivative() == IntPolynomial({1, 0, 3}));
    CHECK(IntPolynomial({5}).derivative().is_zero());
    const int d = 9;
    CHECK(IntPolynomial::monomial(d).derivative() == IntPolynomial::monomial(d - 1, d));
}

TEST_CASE("content and primitive part") {
    auto [c1, p1] = IntPolynomial({4, 0, 2}).content_and_primitive();
    CHECK(c1 == 2);
    CHECK(p1 == IntPolynomial({2, 0, 1}));

    auto [c2, p2] = IntPolynomial({1, 1, 0, 1}).content_and_primitive();
    CHECK(c2 == 1);
    CHECK(p2 == IntPolynomial({1, 1, 0, 1}));

    auto [c3, p3] = IntPolynomial({0, -3}).content_and_primitive();
    CHECK(c3 == 3);
    CHECK(p3 == IntPolynomial({0, -1}));

    CHECK_THROWS_AS(IntPolynomial{}.content_and_primitive(), std::domain_error);
}

TEST_CASE("content is multiplicative (Gauss)") {
    TrialRng rng(20240901);
    for (int iter = 0; iter < 300; ++iter) {
        IntPolynomial p = random_poly(rng, 5, -8, 8);
        IntPolynomial q = random_poly(rng, 5, -8, 8);
        if (p.is_zero() || q.is_zero()) continue;
        auto [cp, _p] = p.content_and_primitive();
        auto [cq, _q] = q.content_and_primitive();
        auto [cpq, _pq] = (p * q).content_and_primitive();
        CHECK(cpq == cp * cq);
    }
}

TEST_CASE("evaluate distributes over multiply; degrees add") {
    TrialRng rng(77);
    for (int iter = 0; iter < 300; ++iter) {
        IntPolynomial p = random_poly(rng, 6, -9, 9);
        IntPolynomial q = random_poly(rng, 6, -9, 9);
        const mpz_class x = rng.uniform_int(-10, 10);
        CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
        if (!p.is_zero() && !q.is_zero())
            CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("exact division round trip") {
    TrialRng rng(31337);
    for (int iter = 0; iter < 300; ++iter) {
        IntPolynomial p = random_poly(rng, 5, -9, 9);
        IntPolynomial q = random_poly(rng, 5, -9, 9);
        if (q.is_zero()) continue;
        auto quot = (p * q).divide_exact(q);
        REQUIRE(quot.has_value());
        CHECK(*quot == p);
    }
    CHECK(!IntPolynomial({1, 1}).divide_exact(IntPolynomial({0, 1})).has_value());
    CHECK(!IntPolynomial({1, 3, 1}).divide_exact(IntPolynomial({1, 2})).has_value());
    CHECK_THROWS_AS(IntPolynomial({1}).divide_exact(IntPolynomial{}), std::domain_error);
}

TEST_CASE("poly_gcd recovers common factors") {
    TrialRng rng(424242);
    for (int iter = 0; iter < 150; ++iter) {
        IntPolynomial g = random_poly(rng, 3, -5, 5);
        if (g.is_zero()) continue;
        IntPolynomial a = random_poly(rng, 3, -5, 5);
        IntPolynomial b = random_poly(rng, 3, -5, 5);
        if (a.is_zero() || b.is_zero()) continue;
        IntPolynomial d = poly_gcd(a * g, b * g);
        auto [cg, pg] = g.content_and_primitive();
        if (pg.leading() < 0) pg = -pg;
        // pg divides the gcd
        CHECK(d.divide_exact(pg).has_value());
        // and the gcd divides both products
        CHECK((a * g).divide_exact(d).has_value());
        CHECK((b * g).divide_exact(d).has_value());
    }
    CHECK(poly_gcd(IntPolynomial({2, 2}), IntPolynomial({3, 3})) == IntPolynomial({1, 1}));
    CHECK(poly_gcd(IntPolynomial({1, 0, 1}), IntPolynomial({1, 1})) == IntPolynomial({1}));
}

TEST_CASE("coefficient transforms") {
    const IntPolynomial p({1, 2, 3});
    CHECK(p.substitute_neg_x() == IntPolynomial({1, -2, 3}));
    CHECK(p.reversed() == IntPolynomial({3, 2, 1}));
    CHECK(p.l2_norm_squared() == 14);
}

TEST_CASE("ordering is degree then lexicographic") {
    CHECK(poly_less(IntPolynomial({5}), IntPolynomial({0, 1})));
    CHECK(poly_less(IntPolynomial({-1, 1}), IntPolynomial({1, 1})));
    CHECK(!poly_less(IntPolynomial({1, 1}), IntPolynomial({1, 1})));
}
