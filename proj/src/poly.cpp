#include "mbig/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace mbig {

namespace {

void normalize(Poly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

void check_same(const Poly& a, const Poly& b) {
    if (a.f != b.f) fail(errc::ctx_mismatch, "polynomials over different fields");
}

} // namespace

Poly poly_make(const Field& f, std::vector<felem> coeffs) {
    Poly p{&f, std::move(coeffs)};
    normalize(p);
    return p;
}

Poly poly_zero(const Field& f) { return Poly{&f, {}}; }
Poly poly_one(const Field& f) { return Poly{&f, {1}}; }
Poly poly_x(const Field& f) { return Poly{&f, {0, 1}}; }
Poly poly_const(const Field& f, felem a) { return poly_make(f, {a}); }
Poly poly_linear_root(const Field& f, felem a) { return Poly{&f, {f.neg(a), 1}}; }

Poly poly_add(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly r{a.f, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        felem x = i < a.c.size() ? a.c[i] : 0;
        felem y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = a.f->add(x, y);
    }
    normalize(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly r{a.f, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        felem x = i < a.c.size() ? a.c[i] : 0;
        felem y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = a.f->sub(x, y);
    }
    normalize(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return poly_zero(*a.f);
    Poly r{a.f, std::vector<felem>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = a.f->add(r.c[i + j], a.f->mul(a.c[i], b.c[j]));
    }
    normalize(r);
    return r;
}

Poly poly_scale(const Poly& a, felem s) {
    Poly r = a;
    for (auto& x : r.c) x = a.f->mul(x, s);
    normalize(r);
    return r;
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    Poly rem = a;
    Poly quo{a.f, {}};
    if (a.deg() >= b.deg()) quo.c.assign(a.deg() - b.deg() + 1, 0);
    felem li = a.f->inv(b.lead());
    while (rem.deg() >= b.deg() && !rem.is_zero()) {
        felem c = a.f->mul(rem.lead(), li);
        int off = rem.deg() - b.deg();
        quo.c[off] = c;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            rem.c[off + i] = a.f->sub(rem.c[off + i], a.f->mul(b.c[i], c));
        normalize(rem);
    }
    normalize(quo);
    return {quo, rem};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divrem(a, b).second; }

Poly poly_monic(const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, a.f->inv(a.lead()));
}

Poly poly_gcd(Poly a, Poly b) {
    check_same(a, b);
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

Poly poly_ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
    check_same(a, b);
    Poly r0 = a, r1 = b;
    Poly s0 = poly_one(*a.f), s1 = poly_zero(*a.f);
    Poly t0 = poly_zero(*a.f), t1 = poly_one(*a.f);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        Poly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        felem li = a.f->inv(r0.lead());
        r0 = poly_scale(r0, li);
        s0 = poly_scale(s0, li);
        t0 = poly_scale(t0, li);
    }
    s = std::move(s0);
    t = std::move(t0);
    return r0;
}

Poly poly_derivative(const Poly& a) {
    Poly r{a.f, {}};
    if (a.deg() < 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = a.f->mul(a.c[i], a.f->from_int(std::int64_t(i)));
    normalize(r);
    return r;
}

felem poly_eval(const Poly& a, felem x) {
    felem acc = 0;
    for (std::size_t i = a.c.size(); i-- > 0;)
        acc = a.f->add(a.f->mul(acc, x), a.c[i]);
    return acc;
}

Poly poly_powmod(const Poly& base, std::uint64_t n, const Poly& mod) {
    Poly r = poly_one(*base.f);
    Poly b = poly_mod(base, mod);
    while (n) {
        if (n & 1) r = poly_mod(poly_mul(r, b), mod);
        b = poly_mod(poly_mul(b, b), mod);
        n >>= 1;
    }
    return r;
}

Poly poly_pow(const Poly& a, std::uint32_t n) {
    Poly r = poly_one(*a.f);
    Poly b = a;
    while (n) {
        if (n & 1) r = poly_mul(r, b);
        b = poly_mul(b, b);
        n >>= 1;
    }
    return r;
}

Poly poly_embed(const Poly& a, const Field& dst) {
    if (a.f == &dst) return a;
    Poly r{&dst, {}};
    r.c.reserve(a.c.size());
    for (felem x : a.c) r.c.push_back(embed(*a.f, dst, x));
    normalize(r);
    return r;
}

namespace {

// p-th root of f(x) = g(x^p) (every exponent divisible by p); the p-th root
// of a coefficient in GF(p^e) is its q/p power.
Poly pth_root(const Poly& a) {
    const Field& F = *a.f;
    std::uint64_t root_exp = F.q / F.p;
    Poly r{a.f, {}};
    r.c.resize(a.c.size() / F.p + 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (i % F.p != 0) fail(errc::bad_argument, "pth_root: exponent not divisible by p");
        r.c[i / F.p] = F.pow(a.c[i], std::int64_t(root_exp));
    }
    normalize(r);
    return r;
}

// monic squarefree decomposition: product of g^m over output = input
void squarefree_decomp(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    if (f.deg() < 1) return;
    Poly d = poly_derivative(f);
    if (d.is_zero()) {
        squarefree_decomp(pth_root(f), mult * int(f.f->p), out);
        return;
    }
    Poly c = poly_gcd(f, d);
    Poly w = poly_divrem(f, c).first;
    int i = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(w, c);
        Poly fac = poly_divrem(w, y).first;
        if (fac.deg() > 0) out.emplace_back(poly_monic(fac), mult * i);
        w = std::move(y);
        c = poly_divrem(c, w).first;
        ++i;
    }
    if (c.deg() > 0) squarefree_decomp(pth_root(c), mult * int(f.f->p), out);
}

Poly random_poly(const Field& F, int deg_below, std::mt19937_64& rng) {
    std::vector<felem> c(std::size_t(deg_below), 0);
    for (auto& x : c) x = felem(rng() % F.q);
    return poly_make(F, std::move(c));
}

// equal-degree splitting: h monic squarefree, all irreducible factors of
// degree d
void equal_degree(const Poly& h, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const Field& F = *h.f;
    if (h.deg() == d) {
        out.push_back(h);
        return;
    }
    for (;;) {
        Poly r = random_poly(F, h.deg(), rng);
        if (r.deg() < 1) continue;
        Poly split;
        if (F.p == 2) {
            // trace map over GF(2^(e*d))
            Poly t = poly_zero(F);
            Poly cur = poly_mod(r, h);
            for (std::uint64_t i = 0; i < std::uint64_t(F.e) * std::uint64_t(d); ++i) {
                t = poly_add(t, cur);
                cur = poly_mod(poly_mul(cur, cur), h);
            }
            split = poly_gcd(t, h);
        } else {
            // r^((q^d-1)/2) via norm-style ladder: u = r^(1+q+...+q^(d-1))
            Poly u = poly_mod(r, h);
            Poly rq = u;
            for (int i = 1; i < d; ++i) {
                rq = poly_powmod(rq, F.q, h);
                u = poly_mod(poly_mul(u, rq), h);
            }
            Poly s = poly_powmod(u, (F.q - 1) / 2, h);
            split = poly_gcd(poly_sub(s, poly_one(F)), h);
        }
        if (split.deg() > 0 && split.deg() < h.deg()) {
            equal_degree(split, d, rng, out);
            equal_degree(poly_divrem(h, split).first, d, rng, out);
            return;
        }
    }
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        std::uint64_t ka = a.f->lex_key(a.c[i]);
        std::uint64_t kb = b.f->lex_key(b.c[i]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

} // namespace

std::vector<std::pair<Poly, int>> poly_factor(const Poly& fpoly, std::uint64_t seed) {
    if (!fpoly.is_monic()) fail(errc::not_monic, "factor requires a monic polynomial");
    if (fpoly.deg() < 1) fail(errc::bad_argument, "factor requires degree >= 1");
    const Field& F = *fpoly.f;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

    std::vector<std::pair<Poly, int>> sqf;
    squarefree_decomp(fpoly, 1, sqf);

    std::vector<std::pair<Poly, int>> result;
    for (auto& [g0, mult] : sqf) {
        // distinct-degree on the squarefree part
        Poly g = g0;
        Poly x = poly_x(F);
        Poly h = poly_powmod(x, F.q, g);
        int d = 1;
        while (2 * d <= g.deg()) {
            Poly gd = poly_gcd(poly_sub(h, x), g);
            if (gd.deg() > 0) {
                std::vector<Poly> irr;
                equal_degree(gd, d, rng, irr);
                for (auto& pi : irr) result.emplace_back(pi, mult);
                g = poly_divrem(g, gd).first;
                h = poly_mod(h, g);
            }
            ++d;
            h = poly_powmod(h, F.q, g);
        }
        if (g.deg() > 0) result.emplace_back(g, mult);
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return result;
}

SplitRoots roots_in_splitting_field(const Poly& fpoly) {
    if (!fpoly.is_monic()) fail(errc::not_monic, "roots require a monic polynomial");
    if (fpoly.deg() < 1) fail(errc::bad_argument, "roots require degree >= 1");
    const Field& F = *fpoly.f;
    auto fac = poly_factor(fpoly, 1);
    std::uint64_t lcm = 1;
    for (auto& [g, m] : fac) lcm = std::lcm(lcm, std::uint64_t(g.deg()));
    const Field& ext = Field::get(F.p, F.e * std::uint32_t(lcm)); // may throw FieldTooLarge
    SplitRoots out{&ext, {}};
    std::mt19937_64 rng(2);
    for (auto& [g, m] : fac) {
        if (g.deg() == 1) {
            out.roots.emplace_back(embed(F, ext, F.neg(g.c[0])), m);
            continue;
        }
        Poly ge = poly_embed(g, ext);
        std::vector<Poly> lin;
        equal_degree(ge, 1, rng, lin);
        for (auto& li : lin) out.roots.emplace_back(ext.neg(li.c[0]), m);
    }
    std::sort(out.roots.begin(), out.roots.end(), [&](const auto& a, const auto& b) {
        return ext.lex_key(a.first) < ext.lex_key(b.first);
    });
    return out;
}

int root_multiplicity(const Poly& fpoly, const Field& af, felem a) {
    Poly f = fpoly.f == &af ? fpoly : poly_embed(fpoly, af);
    Poly lin = poly_linear_root(af, a);
    int mult = 0;
    while (!f.is_zero() && f.deg() >= 1) {
        auto [q, r] = poly_divrem(f, lin);
        if (!r.is_zero()) break;
        ++mult;
        f = std::move(q);
    }
    return mult;
}

bool is_simple_root(const Poly& fpoly, const Field& af, felem a) {
    return root_multiplicity(fpoly, af, a) == 1;
}

} // namespace mbig
