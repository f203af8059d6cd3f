#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "mbig/rootdata.hpp"

using namespace mbig;

namespace {

// brute-force |ker lam ∩ T(k)| by scanning all torus points
std::uint64_t kernel_count_brute(const RootDatum& d, const Field& f, const Weight& lam) {
    std::uint64_t qm1 = f.q - 1, count = 0;
    std::vector<std::uint64_t> e(d.rank, 0);
    felem g = f.generator();
    for (;;) {
        std::vector<felem> coords;
        for (std::uint64_t ei : e) coords.push_back(f.pow(g, std::int64_t(ei)));
        if (weight_value(f, lam, coords) == 1) ++count;
        std::size_t i = d.rank;
        bool done = true;
        while (i-- > 0) {
            if (++e[i] < qm1) {
                done = false;
                break;
            }
            e[i] = 0;
        }
        if (done) return count;
    }
}

} // namespace

TEST_CASE("root datum invariants") {
    for (const char* t : {"A1", "A2", "B2", "A1xA1", "A1xB2", "A2xA1"}) {
        RootDatum d = root_datum(t);
        CHECK(d.roots.size() == d.coroots.size());
        for (std::size_t i = 0; i < d.roots.size(); ++i) {
            CHECK(pairing(d.roots[i], d.coroots[i]) == 2); // self-pairing
            // negatives present
            Weight neg = d.roots[i];
            for (auto& c : neg) c = -c;
            CHECK(std::find(d.roots.begin(), d.roots.end(), neg) != d.roots.end());
        }
    }
    CHECK(root_datum("A1").rank == 1);
    CHECK(root_datum("B2").rank == 2);
    CHECK(root_datum("A1xB2").rank == 3);
    CHECK_THROWS_AS((void)root_datum("G2"), Error);
}

TEST_CASE("weight norms") {
    RootDatum a1 = root_datum("A1");
    for (std::int64_t j = -5; j <= 5; ++j)
        CHECK(weight_norm(a1, {j}) == std::uint64_t(j < 0 ? -j : j));
    CHECK(weight_norm(root_datum("A2"), {0, 0}) == 0);
    CHECK(weight_norm(root_datum("A1xA1"), {2, 3}) == 3);
}

TEST_CASE("bounded weight enumeration") {
    RootDatum a1 = root_datum("A1");
    auto w3 = weights_below(a1, 3);
    REQUIRE(w3.size() == 5);
    for (std::int64_t j = -2; j <= 2; ++j)
        CHECK(std::find(w3.begin(), w3.end(), Weight{j}) != w3.end());
    CHECK(weights_below(a1, 1) == std::vector<Weight>{{0}});
    CHECK(weights_below(root_datum("A1xA1"), 2).size() == 9);
    // monotone nesting
    for (std::uint32_t n = 1; n < 5; ++n) {
        auto small = weights_below(a1, n), big = weights_below(a1, n + 1);
        for (auto& w : small) CHECK(std::find(big.begin(), big.end(), w) != big.end());
    }
}

TEST_CASE("difference set is contained in the doubled-norm weight window") {
    for (const char* t : {"A1", "A2", "A1xA1"}) {
        RootDatum d = root_datum(t);
        for (std::uint32_t n = 1; n <= 3; ++n) {
            auto s = weights_below(d, 2 * n);
            std::set<Weight> sset(s.begin(), s.end());
            for (auto& w : difference_set(d, n)) {
                CHECK(sset.count(w) == 1);
                CHECK(weight_norm(d, w) > 0);
            }
        }
    }
}

TEST_CASE("m-regular search fixed instances") {
    RootDatum a1 = root_datum("A1");
    const Field& F11 = Field::get(11, 1);
    auto t = find_m_regular(a1, F11, 2, 3);
    REQUIRE(t.has_value());
    CHECK(t->coords == std::vector<felem>{2}); // ord(4) = 5 separates exponents -2..2

    CHECK_FALSE(find_m_regular(a1, F11, 5, 3).has_value()); // t^10 = 1 kills 5th powers

    auto id = find_m_regular(a1, F11, 7, 1);
    REQUIRE(id.has_value());
    CHECK(id->coords == std::vector<felem>{1}); // single weight, vacuous
}

TEST_CASE("found elements pass an independent pairwise value check") {
    for (const char* ty : {"A1", "A1xA1", "A2"}) {
        RootDatum d = root_datum(ty);
        for (std::uint32_t q : {5u, 7u}) {
            const Field& F = Field::get(q, 1);
            for (std::uint32_t m : {1u, 2u})
                for (std::uint32_t n : {1u, 2u}) {
                    auto t = find_m_regular(d, F, m, n);
                    if (!t) continue;
                    auto W = weights_below(d, n);
                    std::set<felem> vals;
                    for (auto& lam : W)
                        vals.insert(F.pow(weight_value(F, lam, t->coords), m));
                    CHECK(vals.size() == W.size());
                }
        }
    }
}

TEST_CASE("kernel counts: fixed values and brute force") {
    RootDatum a1 = root_datum("A1");
    const Field& F11 = Field::get(11, 1);
    CHECK(kernel_count(a1, F11, {2}) == 2);
    CHECK(kernel_count(a1, F11, {0}) == 10);
    RootDatum a1a1 = root_datum("A1xA1");
    const Field& F7 = Field::get(7, 1);
    CHECK(kernel_count(a1a1, F7, {1, 0}) == 6);
    CHECK(kernel_count(a1a1, F7, {0, 0}) == 36);

    for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u}) {
        std::uint32_t p = q, e = 1;
        if (q == 4) p = 2, e = 2;
        if (q == 8) p = 2, e = 3;
        if (q == 9) p = 3, e = 2;
        if (q == 16) p = 2, e = 4;
        const Field& F = Field::get(p, e);
        for (std::int64_t a = -4; a <= 4; ++a) {
            CHECK(kernel_count(a1, F, {a}) == kernel_count_brute(a1, F, {a}));
            for (std::int64_t b = -4; b <= 4; ++b)
                CHECK(kernel_count(a1a1, F, {a, b}) == kernel_count_brute(a1a1, F, {a, b}));
        }
    }
}

TEST_CASE("audit fixed instances") {
    RootDatum a1 = root_datum("A1");
    const Field& F11 = Field::get(11, 1);
    AuditReport r = audit_bounds(a1, F11, 2, 3);
    CHECK(r.torus_size == 10);
    CHECK(r.n_weights == 10); // weights_below(6) minus zero: j in ±1..±5
    CHECK(r.r_mq == 2);
    CHECK(r.max_kernel == 5); // lam = 5: gcd(5, 10) fifth roots of unity
    CHECK(r.uncovered);       // t = 2 survives

    CHECK(audit_bounds(a1, F11, 5, 3).r_mq == 5);
    CHECK_FALSE(audit_bounds(a1, F11, 5, 3).uncovered);
    CHECK(audit_bounds(a1, F11, 3, 3).r_mq == 1);

    const Field& F7 = Field::get(7, 1);
    CHECK(audit_bounds(root_datum("A1xA1"), F7, 1, 1).torus_size == 36);
}

TEST_CASE("search and audit decide the same instances") {
    for (const char* ty : {"A1", "A1xA1", "A2"}) {
        RootDatum d = root_datum(ty);
        for (std::uint32_t q : {5u, 7u}) {
            const Field& F = Field::get(q, 1);
            for (std::uint32_t m : {1u, 2u, 3u})
                for (std::uint32_t n : {1u, 2u}) {
                    bool found = find_m_regular(d, F, m, n).has_value();
                    CHECK(found == audit_bounds(d, F, m, n).uncovered);
                }
        }
    }
}

TEST_CASE("m-th power root counts match gcd for q up to 49") {
    for (std::uint32_t q = 2; q <= 49; ++q) {
        std::uint32_t p = q, e = 1;
        // accept prime powers
        std::uint32_t base = 0;
        for (std::uint32_t cand = 2; cand <= q; ++cand) {
            std::uint32_t pow = cand, deg = 1;
            while (pow < q) pow *= cand, ++deg;
            if (pow == q) {
                base = cand;
                p = cand;
                e = deg;
                break;
            }
        }
        if (!base) continue;
        bool prime = true;
        for (std::uint32_t dd = 2; dd * dd <= p; ++dd)
            if (p % dd == 0) prime = false;
        if (!prime) continue;
        const Field& F = Field::get(p, e);
        for (std::uint32_t m = 1; m <= 12; ++m) {
            std::uint64_t count = 0;
            for (felem a = 1; a < F.q; ++a)
                if (F.pow(a, m) == 1) ++count;
            CHECK(count == std::gcd(std::uint64_t(m), F.q - 1));
        }
    }
}

TEST_CASE("scan caps") {
    RootDatum a1a1 = root_datum("A1xA1");
    const Field& F17 = Field::get(17, 1);
    CHECK_THROWS_AS((void)find_m_regular(a1a1, F17, 1, 2, 100), Error);
    CHECK_THROWS_AS((void)audit_bounds(a1a1, F17, 1, 2, 100), Error);
}
