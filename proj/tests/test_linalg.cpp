#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mbig/linalg.hpp"

using namespace mbig;

namespace {

Mat from_rows(const Field& F, std::vector<std::vector<std::int64_t>> rows) {
    Mat m = mat_make(F, std::uint32_t(rows.size()), std::uint32_t(rows[0].size()));
    for (std::uint32_t i = 0; i < m.rows; ++i)
        for (std::uint32_t j = 0; j < m.cols; ++j) m.at(i, j) = F.from_int(rows[i][j]);
    return m;
}

Mat random_invertible(const Field& F, std::uint32_t n, std::mt19937_64& rng) {
    for (;;) {
        Mat m = mat_make(F, n, n);
        for (felem& x : m.a) x = felem(rng() % F.q);
        if (mat_invertible(m)) return m;
    }
}

} // namespace

TEST_CASE("charpoly fixed values") {
    const Field& F11 = Field::get(11, 1);
    Mat d = from_rows(F11, {{2, 0}, {0, 6}});
    CHECK(charpoly(d) == poly_make(F11, {1, 3, 1})); // (x-2)(x-6) = x^2+3x+1

    const Field& F5 = Field::get(5, 1);
    // oracle: (x-1)^3 computed by polynomial powering
    CHECK(charpoly(mat_identity(F5, 3)) == poly_pow(poly_linear_root(F5, 1), 3));
}

TEST_CASE("charpoly of a companion matrix is the defining polynomial") {
    const Field& F = Field::get(7, 1);
    Poly f = poly_make(F, {2, 5, 0, 3, 1});
    Mat c = mat_make(F, 4, 4);
    for (std::uint32_t i = 1; i < 4; ++i) c.at(i, i - 1) = 1;
    for (std::uint32_t i = 0; i < 4; ++i) c.at(i, 3) = F.neg(f.c[i]);
    CHECK(charpoly(c) == f);
}

TEST_CASE("charpoly is a similarity invariant") {
    std::mt19937_64 rng(99);
    const Field& F = Field::get(11, 1);
    for (int t = 0; t < 20; ++t) {
        Mat g = mat_make(F, 4, 4);
        for (felem& x : g.a) x = felem(rng() % F.q);
        Mat p = random_invertible(F, 4, rng);
        Mat conj = mat_mul(mat_mul(p, g), mat_inverse(p));
        CHECK(charpoly(conj) == charpoly(g));
    }
}

TEST_CASE("kernel fixed values") {
    const Field& F5 = Field::get(5, 1);
    CHECK(kernel(mat_make(F5, 2, 2)).dim() == 2);
    CHECK(kernel(mat_identity(F5, 2)).dim() == 0);
    Subspace k = kernel(from_rows(F5, {{1, 2}, {2, 4}}));
    REQUIRE(k.dim() == 1);
    std::vector<felem> v{3, 1};
    CHECK(subspace_contains(k, v));
}

TEST_CASE("kernel rank-nullity and canonicity") {
    std::mt19937_64 rng(5);
    const Field& F = Field::get(7, 1);
    for (int t = 0; t < 30; ++t) {
        Mat m = mat_make(F, 3, 5);
        for (felem& x : m.a) x = felem(rng() % 7);
        Mat copy = m;
        std::uint32_t rank = rref(copy);
        Subspace k = kernel(m);
        CHECK(k.dim() == 5 - rank);
        // every basis vector is annihilated
        for (std::uint32_t i = 0; i < k.dim(); ++i) {
            std::vector<felem> v(5);
            for (std::uint32_t j = 0; j < 5; ++j) v[j] = k.basis.at(i, j);
            for (felem x : mat_apply(m, v)) CHECK(x == 0);
        }
        // canonical: recomputing gives the identical representation
        CHECK(kernel(m) == k);
    }
}

TEST_CASE("generalized eigenspaces") {
    const Field& F11 = Field::get(11, 1);
    Mat d = from_rows(F11, {{2, 0}, {0, 6}});
    Subspace e2 = generalized_eigenspace(d, 2);
    REQUIRE(e2.dim() == 1);
    std::vector<felem> e1{1, 0};
    CHECK(subspace_contains(e2, e1));
    CHECK(generalized_eigenspace(mat_identity(F11, 3), 1).dim() == 3);
    CHECK(generalized_eigenspace(d, 3).dim() == 0);
}

TEST_CASE("eigenspace dimension equals algebraic multiplicity") {
    std::mt19937_64 rng(17);
    const Field& F = Field::get(5, 1);
    for (int t = 0; t < 30; ++t) {
        Mat g = mat_make(F, 4, 4);
        for (felem& x : g.a) x = felem(rng() % 5);
        Poly h = charpoly(g);
        for (auto& [p, mult] : poly_factor(h, rng()))
            if (p.deg() == 1)
                CHECK(generalized_eigenspace(g, F.neg(p.c[0])).dim() == std::uint32_t(mult));
    }
}

TEST_CASE("spectral projector fixed values") {
    const Field& F11 = Field::get(11, 1);
    Mat d = from_rows(F11, {{2, 0}, {0, 6}});
    CHECK(spectral_projector(d, 2) == from_rows(F11, {{1, 0}, {0, 0}}));
    CHECK(spectral_projector(mat_identity(F11, 3), 1) == mat_identity(F11, 3));
    CHECK_THROWS_AS((void)spectral_projector(d, 3), Error);
}

TEST_CASE("spectral projector properties") {
    std::mt19937_64 rng(4242);
    const Field& F = Field::get(11, 1);
    for (int t = 0; t < 20; ++t) {
        // random diagonalizable matrix with known multiplicities
        Mat diag = mat_make(F, 4, 4);
        for (std::uint32_t i = 0; i < 4; ++i) diag.at(i, i) = felem(1 + rng() % 4);
        Mat p = random_invertible(F, 4, rng);
        Mat g = mat_mul(mat_mul(p, diag), mat_inverse(p));
        for (auto& [fac, mult] : poly_factor(charpoly(g), rng())) {
            felem alpha = F.neg(fac.c[0]);
            Mat pi = spectral_projector(g, alpha);
            CHECK(mat_mul(pi, pi) == pi);
            CHECK(mat_mul(g, pi) == mat_mul(pi, g));
            Mat r = pi;
            CHECK(rref(r) == std::uint32_t(mult));
        }
    }
}

TEST_CASE("matrix embedding is a ring map") {
    const Field& F5 = Field::get(5, 1);
    const Field& F25 = Field::get(5, 2);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; ++t) {
        Mat a = mat_make(F5, 3, 3), b = mat_make(F5, 3, 3);
        for (felem& x : a.a) x = felem(rng() % 5);
        for (felem& x : b.a) x = felem(rng() % 5);
        CHECK(mat_embed(mat_mul(a, b), F25) == mat_mul(mat_embed(a, F25), mat_embed(b, F25)));
        CHECK(mat_embed(mat_add(a, b), F25) == mat_add(mat_embed(a, F25), mat_embed(b, F25)));
    }
}

TEST_CASE("inverse and errors") {
    const Field& F = Field::get(7, 1);
    Mat s = from_rows(F, {{1, 2}, {2, 4}});
    CHECK_FALSE(mat_invertible(s));
    CHECK_THROWS_AS((void)mat_inverse(s), Error);
    std::mt19937_64 rng(3);
    Mat m = random_invertible(F, 3, rng);
    CHECK(mat_mul(m, mat_inverse(m)) == mat_identity(F, 3));
}

TEST_CASE("subspace ordering is a strict weak order on distinct spaces") {
    const Field& F = Field::get(5, 1);
    Subspace a = row_space(from_rows(F, {{1, 0}}));
    Subspace b = row_space(from_rows(F, {{0, 1}}));
    CHECK(subspace_less(a, b) != subspace_less(b, a));
    CHECK_FALSE(subspace_less(a, a));
}
