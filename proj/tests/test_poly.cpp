#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mbig/poly.hpp"

using namespace mbig;

namespace {

// independent irreducibility oracle: f of degree d is irreducible iff
// x^(q^d) = x mod f and gcd(x^(q^i) - x, f) = 1 for all i < d
bool irreducible_oracle(const Poly& f) {
    const Field& F = *f.f;
    int d = f.deg();
    if (d < 1) return false;
    Poly x = poly_x(F);
    Poly pw = x;
    for (int i = 1; i <= d; ++i) {
        pw = poly_powmod(pw, F.q, f);
        Poly diff = poly_sub(pw, poly_mod(x, f));
        if (i < d) {
            if (poly_gcd(diff, f).deg() != 0) return false;
        } else {
            if (!diff.is_zero()) return false;
        }
    }
    return true;
}

Poly random_monic(const Field& F, int deg, std::mt19937_64& rng) {
    std::vector<felem> c(std::size_t(deg) + 1);
    for (int i = 0; i < deg; ++i) c[std::size_t(i)] = felem(rng() % F.q);
    c[std::size_t(deg)] = 1;
    return poly_make(F, std::move(c));
}

} // namespace

TEST_CASE("factor split quadratic over GF(11)") {
    const Field& F = Field::get(11, 1);
    Poly f = poly_make(F, {1, 3, 1}); // x^2+3x+1 = (x-2)(x-6)
    auto fac = poly_factor(f, 0);
    REQUIRE(fac.size() == 2);
    // sorted by coefficient sequence: x+5 before x+9
    CHECK(fac[0].first == poly_linear_root(F, 6));
    CHECK(fac[0].second == 1);
    CHECK(fac[1].first == poly_linear_root(F, 2));
    CHECK(fac[1].second == 1);
}

TEST_CASE("factor repeated and irreducible cases") {
    const Field& F5 = Field::get(5, 1);
    Poly sq = poly_mul(poly_linear_root(F5, 1), poly_linear_root(F5, 1));
    auto fac = poly_factor(sq, 0);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == poly_linear_root(F5, 1));
    CHECK(fac[0].second == 2);

    const Field& F7 = Field::get(7, 1);
    Poly irr = poly_make(F7, {1, 0, 1}); // x^2+1, -1 is a non-residue mod 7
    auto fac2 = poly_factor(irr, 0);
    REQUIRE(fac2.size() == 1);
    CHECK(fac2[0].first == irr);
    CHECK(fac2[0].second == 1);
}

TEST_CASE("factor x^p - c in characteristic p") {
    const Field& F = Field::get(5, 1);
    Poly f = poly_make(F, {F.neg(2), 0, 0, 0, 0, 1}); // x^5 - 2 = (x-2)^5
    auto fac = poly_factor(f, 0);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == poly_linear_root(F, 2));
    CHECK(fac[0].second == 5);
}

TEST_CASE("factor round trip with certified factors") {
    std::mt19937_64 rng(12345);
    int count = 0;
    for (auto [p, e] : {std::pair{5u, 1u}, {7u, 1u}, {11u, 1u}, {5u, 2u}, {7u, 2u}}) {
        const Field& F = Field::get(p, e);
        for (int t = 0; t < 40; ++t) {
            int deg = 1 + int(rng() % 8);
            Poly f = random_monic(F, deg, rng);
            auto fac = poly_factor(f, rng());
            Poly prod = poly_one(F);
            for (auto& [g, mult] : fac) {
                CHECK(g.is_monic());
                CHECK(irreducible_oracle(g));
                for (int i = 0; i < mult; ++i) prod = poly_mul(prod, g);
            }
            CHECK(prod == f);
            ++count;
        }
    }
    CHECK(count == 200);
}

TEST_CASE("factorization is deterministic per seed") {
    const Field& F = Field::get(13, 1);
    Poly f = poly_make(F, {3, 1, 4, 1, 5, 9, 2, 1});
    CHECK(poly_factor(f, 42) == poly_factor(f, 42));
}

TEST_CASE("roots in splitting field") {
    const Field& F11 = Field::get(11, 1);
    SplitRoots r = roots_in_splitting_field(poly_make(F11, {1, 3, 1}));
    CHECK(r.ext == &F11);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == std::pair<felem, int>{2, 1});
    CHECK(r.roots[1] == std::pair<felem, int>{6, 1});

    const Field& F7 = Field::get(7, 1);
    SplitRoots r2 = roots_in_splitting_field(poly_make(F7, {1, 0, 1}));
    CHECK(r2.ext->q == 49);
    REQUIRE(r2.roots.size() == 2);
    for (auto [root, mult] : r2.roots) {
        CHECK(mult == 1);
        CHECK(r2.ext->mul(root, root) == r2.ext->from_int(-1));
    }
    CHECK(r2.roots[0].first != r2.roots[1].first);
    // conjugate under Frobenius
    CHECK(r2.ext->pow(r2.roots[0].first, 7) == r2.roots[1].first);

    const Field& F5 = Field::get(5, 1);
    Poly quartic = poly_pow(poly_linear_root(F5, 1), 4);
    SplitRoots r3 = roots_in_splitting_field(quartic);
    REQUIRE(r3.roots.size() == 1);
    CHECK(r3.roots[0] == std::pair<felem, int>{1, 4});
}

TEST_CASE("splitting-field roots evaluate to zero, multiplicities sum to degree") {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 60; ++t) {
        const Field& F = Field::get(t % 2 ? 5 : 7, 1);
        Poly f = random_monic(F, 2 + int(rng() % 5), rng);
        SplitRoots r = roots_in_splitting_field(f);
        Poly fe = poly_embed(f, *r.ext);
        int total = 0;
        for (auto [root, mult] : r.roots) {
            CHECK(poly_eval(fe, root) == 0);
            CHECK(root_multiplicity(f, *r.ext, root) == mult);
            total += mult;
        }
        CHECK(total == f.deg());
    }
}

TEST_CASE("simple root detection") {
    const Field& F11 = Field::get(11, 1);
    Poly f = poly_make(F11, {1, 3, 1});
    CHECK(is_simple_root(f, F11, 2));
    CHECK_FALSE(is_simple_root(f, F11, 3)); // f(3) = 19 = 8, not a root
    const Field& F5 = Field::get(5, 1);
    Poly sq = poly_mul(poly_linear_root(F5, 1), poly_linear_root(F5, 1));
    CHECK_FALSE(is_simple_root(sq, F5, 1));
}

TEST_CASE("is_simple_root agrees with factor multiplicities") {
    std::mt19937_64 rng(31415);
    const Field& F = Field::get(7, 1);
    for (int t = 0; t < 40; ++t) {
        Poly f = random_monic(F, 1 + int(rng() % 6), rng);
        for (auto& [g, mult] : poly_factor(f, rng())) {
            if (g.deg() != 1) continue;
            felem a = F.neg(g.c[0]);
            CHECK(is_simple_root(f, F, a) == (mult == 1));
        }
    }
}

TEST_CASE("factor rejects non-monic input") {
    const Field& F = Field::get(5, 1);
    CHECK_THROWS_AS((void)poly_factor(poly_make(F, {1, 2}), 0), Error);
}
