#include "polyred/modpoly.hpp"
#include "polyred/rng.hpp"

#include <doctest.h>

using namespace polyred;

namespace {

ModPoly random_mod_poly(TrialRng& rng, uint64_t p, int max_deg) {
    const int d = static_cast<int>(rng.below(static_cast<uint64_t>(max_deg) + 1));
    std::vector<uint64_t> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = rng.below(p);
    return ModPoly(p, std::move(c));
}

ModPoly reconstruct(const std::vector<ModFactor>& factors, uint64_t unit, uint64_t p) {
    ModPoly prod = ModPoly::one(p) * unit;
    for (const auto& [f, mult] : factors)
        for (int i = 0; i < mult; ++i) prod = prod * f;
    return prod;
}

} // namespace

TEST_CASE("divmod invariant") {
    TrialRng rng(99);
    for (uint64_t p : {2ull, 3ull, 5ull, 17ull}) {
        for (int iter = 0; iter < 200; ++iter) {
            ModPoly a = random_mod_poly(rng, p, 8);
            ModPoly b = random_mod_poly(rng, p, 5);
            if (b.is_zero()) continue;
            auto [q, r] = a.divmod(b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("factor mod p spec examples") {
    // (x^2+1, 2) -> (x+1)^2
    auto f2 = mod_factor(ModPoly(2, {1, 0, 1}), 1);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].factor == ModPoly(2, {1, 1}));
    CHECK(f2[0].multiplicity == 2);

    // (x^2+1, 5) -> (x+2)(x+3)
    auto f5 = mod_factor(ModPoly(5, {1, 0, 1}), 1);
    REQUIRE(f5.size() == 2);
    CHECK(f5[0].factor == ModPoly(5, {2, 1}));
    CHECK(f5[1].factor == ModPoly(5, {3, 1}));

    // (x^2+1, 3) -> irreducible
    auto f3 = mod_factor(ModPoly(3, {1, 0, 1}), 1);
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].factor.degree() == 2);
    CHECK(f3[0].multiplicity == 1);
}

TEST_CASE("factor mod p reconstructs and is deterministic") {
    TrialRng rng(7);
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull}) {
        for (int iter = 0; iter < 120; ++iter) {
            ModPoly f = random_mod_poly(rng, p, 9);
            if (f.degree() < 1) continue;
            auto factors = mod_factor(f, 1234);
            CHECK(reconstruct(factors, f.leading(), p) == f);
            for (const auto& [g, mult] : factors) {
                CHECK(g.leading() == 1);
                CHECK(g.degree() >= 1);
            }
            auto again = mod_factor(f, 1234);
            REQUIRE(again.size() == factors.size());
            for (size_t i = 0; i < factors.size(); ++i) {
                CHECK(again[i].factor == factors[i].factor);
                CHECK(again[i].multiplicity == factors[i].multiplicity);
            }
        }
    }
}

TEST_CASE("distinct-degree factor degrees") {
    // x^4+x^3+x^2+x+1 is irreducible mod 2 (2 is a primitive root mod 5)
    CHECK(mod_factor_degrees(ModPoly(2, {1, 1, 1, 1, 1})) == std::vector<int>{4});
    // x^2-1 splits into two linear factors mod 3
    CHECK(mod_factor_degrees(ModPoly(3, {2, 0, 1})) == std::vector<int>{1, 1});
}

TEST_CASE("pow mod") {
    const ModPoly f(5, {1, 0, 1}); // x^2+1
    const ModPoly x = ModPoly::x(5);
    ModPoly r = mod_pow(x, mpz_class(4), f);
    // x^4 = (x^2)^2 = (-1)^2 = 1 mod (x^2+1)
    CHECK(r == ModPoly::one(5));
}
