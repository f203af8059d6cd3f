#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mbig/matgroup.hpp"

using namespace mbig;

namespace {

Mat from_rows(const Field& F, std::vector<std::vector<std::int64_t>> rows) {
    Mat m = mat_make(F, std::uint32_t(rows.size()), std::uint32_t(rows[0].size()));
    for (std::uint32_t i = 0; i < m.rows; ++i)
        for (std::uint32_t j = 0; j < m.cols; ++j) m.at(i, j) = F.from_int(rows[i][j]);
    return m;
}

GroupSpec diag_group(const Field& F, std::int64_t a, std::int64_t b) {
    return GroupSpec{&F, 2, {from_rows(F, {{a, 0}, {0, b}})}};
}

GroupSpec unipotent(const Field& F) {
    return GroupSpec{&F, 2, {from_rows(F, {{1, 1}, {0, 1}})}};
}

} // namespace

TEST_CASE("closure enumeration orders") {
    const Field& F11 = Field::get(11, 1);
    CHECK(enumerate(diag_group(F11, 2, 6)).order() == 10); // ord(2) = 10
    CHECK(enumerate(sl2_spec(5)).order() == 120);
    const Field& F7 = Field::get(7, 1);
    CHECK(enumerate(GroupSpec{&F7, 2, {mat_identity(F7, 2)}}).order() == 1);
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u})
        CHECK(enumerate(sl2_spec(q)).order() == std::uint64_t(q) * (q * q - 1));
}

TEST_CASE("enumeration structure: identity first, valid Cayley edges and words") {
    EnumeratedGroup g = enumerate(sl2_spec(5));
    CHECK(g.elems[0] == mat_identity(*g.spec.f, 2));
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; ++t) {
        std::uint32_t i = std::uint32_t(rng() % g.order());
        std::uint32_t s = std::uint32_t(rng() % 2);
        CHECK(g.elems[g.edge[s][i]] == mat_mul(g.elems[i], g.spec.generators[s]));
        if (i != 0) {
            auto [par, gen] = g.parent[i];
            CHECK(g.elems[i] == mat_mul(g.elems[par], g.spec.generators[gen]));
            CHECK(par < i);
        }
    }
    // closed under inverses
    for (int t = 0; t < 20; ++t)
        CHECK(g.contains(mat_inverse(g.elems[rng() % g.order()])));
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS((void)enumerate(sl2_spec(7), 100), Error);
    const Field& F5 = Field::get(5, 1);
    GroupSpec singular{&F5, 2, {from_rows(F5, {{1, 2}, {2, 4}})}};
    CHECK_THROWS_AS((void)enumerate(singular), Error);
}

TEST_CASE("derived subgroup") {
    const Field& F11 = Field::get(11, 1);
    EnumeratedGroup abelian = enumerate(diag_group(F11, 2, 6));
    CHECK(derived_subgroup(abelian).order() == 1);

    EnumeratedGroup sl25 = enumerate(sl2_spec(5));
    EnumeratedGroup der = derived_subgroup(sl25);
    CHECK(der.order() == 120); // perfect

    const Field& F5 = Field::get(5, 1);
    CHECK(derived_subgroup(enumerate(unipotent(F5))).order() == 1);

    // normality: closed under conjugation by ambient generators
    EnumeratedGroup borel = enumerate(
        GroupSpec{&F5, 2, {from_rows(F5, {{1, 1}, {0, 1}}), from_rows(F5, {{2, 0}, {0, 3}})}});
    EnumeratedGroup db = derived_subgroup(borel);
    for (const Mat& s : borel.spec.generators)
        for (std::uint32_t i = 0; i < db.order(); ++i)
            CHECK(db.contains(mat_mul(mat_mul(s, db.elems[i]), mat_inverse(s))));
}

TEST_CASE("l-power quotients") {
    const Field& F5 = Field::get(5, 1);
    CHECK(has_l_power_quotient(enumerate(unipotent(F5)), 5));
    CHECK_FALSE(has_l_power_quotient(enumerate(sl2_spec(5)), 5));
    const Field& F11 = Field::get(11, 1);
    EnumeratedGroup c10 = enumerate(diag_group(F11, 2, 6));
    CHECK_FALSE(has_l_power_quotient(c10, 7)); // 7 does not divide 10
    CHECK(has_l_power_quotient(c10, 5));
    CHECK_FALSE(has_l_power_quotient(c10, 3)); // gcd(3, 10) = 1
}

TEST_CASE("scalar closure") {
    const Field& F7 = Field::get(7, 1);
    EnumeratedGroup trivial = enumerate(GroupSpec{&F7, 2, {mat_identity(F7, 2)}});
    EnumeratedGroup sc = scalar_closure(trivial);
    CHECK(sc.order() == 6);

    EnumeratedGroup sl25 = enumerate(sl2_spec(5));
    EnumeratedGroup sc2 = scalar_closure(sl25);
    CHECK(sc2.order() == 240);
    CHECK(scalar_closure(sc2).order() == 240); // idempotent
}

TEST_CASE("symmetric powers") {
    GroupSpec s5 = sl2_spec(5);
    GroupSpec s1 = sym_power_generators(s5, 1);
    CHECK(s1.generators == s5.generators);

    const Field& F5 = Field::get(5, 1);
    GroupSpec s2 = sym_power_generators(unipotent(F5), 2);
    CHECK(s2.generators[0] == from_rows(F5, {{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}));

    // homomorphism on random pairs
    std::mt19937_64 rng(11);
    const Field& F7 = Field::get(7, 1);
    EnumeratedGroup g = enumerate(sl2_spec(7));
    for (std::uint32_t k : {2u, 3u, 4u}) {
        for (int t = 0; t < 10; ++t) {
            Mat a = g.elems[rng() % g.order()], b = g.elems[rng() % g.order()];
            auto lift = [&](const Mat& m) {
                return sym_power_generators(GroupSpec{&F7, 2, {m}}, k).generators[0];
            };
            CHECK(lift(mat_mul(a, b)) == mat_mul(lift(a), lift(b)));
        }
    }
}

TEST_CASE("symmetric power beyond the characteristic") {
    // binomial coefficients must be reduced as integers, not built by
    // field division
    const Field& F3 = Field::get(3, 1);
    GroupSpec u{&F3, 2, {from_rows(F3, {{1, 1}, {0, 1}})}};
    GroupSpec s3 = sym_power_generators(u, 3);
    // row 0 expands (x+y)^3 = x^3 + 3x^2y + 3xy^2 + y^3 = x^3 + y^3 mod 3
    CHECK(s3.generators[0] == from_rows(F3, {{1, 0, 0, 1}, {0, 1, 2, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
}
