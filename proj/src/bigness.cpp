#include "mbig/bigness.hpp"

#include <algorithm>
#include <map>

namespace mbig {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::big: return "BIG";
    case Verdict::not_big: return "NOT_BIG";
    case Verdict::indeterminate: return "INDETERMINATE";
    }
    return "?";
}

namespace {

// Eigenvalues alpha in k that are simple roots of h and whose m-th power
// differs from every other root's over the splitting field, ascending.
std::vector<felem> qualifying_alphas(const Poly& h, std::uint32_t m, std::uint64_t seed) {
    const Field& F = *h.f;
    std::vector<felem> cand;
    for (const auto& [p, mult] : poly_factor(h, seed))
        if (p.deg() == 1 && mult == 1) cand.push_back(F.neg(p.c[0]));
    if (cand.empty()) return cand;
    SplitRoots sr = roots_in_splitting_field(h);
    const Field& E = *sr.ext;
    std::vector<felem> out;
    for (felem a : cand) {
        felem ae = embed(F, E, a);
        felem am = E.pow(ae, m);
        bool sep = true;
        for (const auto& [b, bm] : sr.roots) {
            if (b == ae) continue;
            if (E.pow(b, m) == am) {
                sep = false;
                break;
            }
        }
        if (sep) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Mat basis_row_as_matrix(const Subspace& w, std::uint32_t j, std::uint32_t n) {
    Mat f = mat_make(*w.basis.f, n, n);
    for (std::uint32_t t = 0; t < n * n; ++t) f.a[t] = w.basis.at(j, t);
    return f;
}

bool all_found(const B4Result& r) {
    for (const auto& e : r.entries)
        if (!e.found) return false;
    return true;
}

bool is_cap_error(errc c) {
    return c == errc::group_too_large || c == errc::chop_budget_exceeded ||
           c == errc::too_many_submodules || c == errc::system_too_large ||
           c == errc::search_space_too_large;
}

} // namespace

B4Result check_b4(const EnumeratedGroup& g, std::uint32_t m, std::uint64_t seed,
                  const Caps& caps) {
    const Field& F = *g.spec.f;
    std::uint32_t n = g.spec.n;
    GModule ad = ad_module(g);
    B4Result res;
    res.submodules = irreducible_submodules(ad, g, caps.submodule_cap, seed, caps.chop_budget);
    res.entries.resize(res.submodules.size());
    for (std::uint32_t i = 0; i < res.entries.size(); ++i) res.entries[i].submodule = i;
    std::size_t remaining = res.entries.size();

    std::map<std::vector<felem>, std::vector<felem>> qual_cache;
    for (std::uint32_t i = 0; i < g.order() && remaining > 0; ++i) {
        Poly h = charpoly(g.elems[i]);
        auto it = qual_cache.find(h.c);
        if (it == qual_cache.end())
            it = qual_cache.emplace(h.c, qualifying_alphas(h, m, seed)).first;
        for (felem alpha : it->second) {
            if (!remaining) break;
            Mat proj = spectral_projector(g.elems[i], alpha);
            for (auto& entry : res.entries) {
                if (entry.found) continue;
                const Subspace& w = res.submodules[entry.submodule];
                for (std::uint32_t j = 0; j < w.dim(); ++j) {
                    Mat comp = mat_mul(mat_mul(proj, basis_row_as_matrix(w, j, n)), proj);
                    if (!comp.is_zero()) {
                        entry.found = true;
                        entry.element = i;
                        entry.alpha = alpha;
                        entry.f_index = j;
                        --remaining;
                        break;
                    }
                }
            }
        }
    }
    return res;
}

BignessCertificate is_m_big(const EnumeratedGroup& g, std::uint32_t m, std::uint64_t seed,
                            const Caps& caps) {
    const Field& F = *g.spec.f;
    BignessCertificate c;
    c.m = m;
    auto guarded = [&](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            if (!is_cap_error(e.code)) throw;
            c.caps_hit.push_back(errc_name(e.code));
        }
    };
    guarded([&] {
        EnumeratedGroup der = derived_subgroup(g, caps.element_cap);
        c.b1 = (g.order() / der.order()) % F.p != 0;
    });
    guarded([&] {
        c.b2 = is_absolutely_irreducible(standard_module(g), g, seed, caps.chop_budget);
    });
    guarded([&] {
        c.h1 = h1_dim(g, ad0_submodule(ad_module(g)), false, caps.cocycle_budget);
        c.b3 = c.h1 == 0;
    });
    guarded([&] { c.b4 = check_b4(g, m, seed, caps); });
    if (!c.caps_hit.empty())
        c.verdict = Verdict::indeterminate;
    else
        c.verdict = (c.b1 && c.b2 && c.b3 && all_found(c.b4)) ? Verdict::big : Verdict::not_big;
    return c;
}

bool verify_witness(const EnumeratedGroup& g, std::uint32_t m, const Subspace& w,
                    const B4Entry& entry) {
    if (!entry.found) return false;
    const Field& F = *g.spec.f;
    std::uint32_t n = g.spec.n;
    if (entry.element >= g.order() || w.ambient != n * n || entry.f_index >= w.dim())
        return false;
    const Mat& gm = g.elems[entry.element];
    Mat a = mat_sub(gm, mat_scalar(F, n, entry.alpha));
    Mat an = mat_pow(a, n);
    Subspace eig = kernel(an);
    if (eig.dim() != 1) return false; // alpha must be a simple root of h_g
    Poly h = charpoly(gm);
    auto [quot, rem] = poly_divrem(h, poly_linear_root(F, entry.alpha));
    if (!rem.is_zero()) return false;
    // remaining roots beta satisfy beta^m != alpha^m iff x^m - alpha^m is
    // coprime to h/(x - alpha); the gcd over k already decides this
    std::vector<felem> xm(m + 1, 0);
    xm[0] = F.neg(F.pow(entry.alpha, m));
    xm[m] = 1;
    if (poly_gcd(quot, poly_make(F, std::move(xm))).deg() != 0) return false;
    // compression of the witness functional: image of the eigenvector under
    // f must leave im(g - alpha)^n, the complement of the eigenspace
    Mat fm = basis_row_as_matrix(w, entry.f_index, n);
    Subspace complement = row_space(mat_transpose(an));
    std::vector<felem> u(eig.basis.a.begin(), eig.basis.a.begin() + n);
    return !subspace_contains(complement, mat_apply(fm, u));
}

namespace {

bool passes_b234(const EnumeratedGroup& g, std::uint32_t m, std::uint64_t seed,
                 const Caps& caps) {
    BignessCertificate c = is_m_big(g, m, seed, caps);
    return c.caps_hit.empty() && c.b2 && c.b3 && all_found(c.b4);
}

} // namespace

MetamorphicReport metamorphic_suite(const EnumeratedGroup& g, std::uint32_t m, std::uint64_t seed,
                                    const std::optional<GroupSpec>& normal_h, const Caps& caps) {
    const Field& F = *g.spec.f;
    MetamorphicReport rep;
    rep.base = is_m_big(g, m, seed, caps).verdict;
    rep.scalar = is_m_big(scalar_closure(g, caps.element_cap), m, seed, caps).verdict;
    rep.scalar_ok = rep.base == rep.scalar;

    const Field& F2 = Field::get(F.p, 2 * F.e);
    GroupSpec emb{&F2, g.spec.n, {}};
    for (const Mat& s : g.spec.generators) emb.generators.push_back(mat_embed(s, F2));
    rep.embedded = is_m_big(enumerate(emb, caps.element_cap), m, seed, caps).verdict;
    rep.base_change_ok = rep.base == rep.embedded;

    GroupSpec hs = normal_h.value_or(g.spec);
    bool h_ok = passes_b234(enumerate(hs, caps.element_cap), m, seed, caps);
    rep.normal_ok = !h_ok || passes_b234(g, m, seed, caps);

    rep.ok = rep.normal_ok && rep.scalar_ok && rep.base_change_ok;
    return rep;
}

} // namespace mbig
