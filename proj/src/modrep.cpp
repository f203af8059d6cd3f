#include "mbig/modrep.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mbig {

GModule standard_module(const EnumeratedGroup& g) {
    return GModule{g.spec.f, g.spec.n, g.spec.generators, "std"};
}

GModule ad_module(const EnumeratedGroup& g) {
    const Field& F = *g.spec.f;
    std::uint32_t n = g.spec.n;
    GModule out{&F, n * n, {}, "ad"};
    for (const Mat& s : g.spec.generators) {
        Mat sinv = mat_inverse(s);
        Mat act = mat_make(F, n * n, n * n);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                // column for basis element E_ab: vec(s E_ab s^-1)
                // s E_ab s^-1 has (i,j) entry s(i,a) sinv(b,j)
                std::uint32_t col = a * n + b;
                for (std::uint32_t i = 0; i < n; ++i)
                    for (std::uint32_t j = 0; j < n; ++j)
                        act.at(i * n + j, col) = F.mul(s.at(i, a), sinv.at(b, j));
            }
        out.action.push_back(std::move(act));
    }
    return out;
}

Subspace ad0_subspace(const GModule& ad) {
    const Field& F = *ad.f;
    std::uint32_t n2 = ad.dim;
    std::uint32_t n = 0;
    while (n * n < n2) ++n;
    if (n * n != n2) fail(errc::bad_argument, "not an adjoint module");
    Mat tr = mat_make(F, 1, n2);
    for (std::uint32_t i = 0; i < n; ++i) tr.at(0, i * n + i) = 1;
    return kernel(tr);
}

Mat restrict_action(const Subspace& u, const Mat& a) {
    const Field& F = *a.f;
    std::uint32_t d = u.dim();
    // pivot columns of the RREF basis
    std::vector<std::uint32_t> piv(d);
    for (std::uint32_t i = 0; i < d; ++i) {
        std::uint32_t pc = 0;
        while (pc < u.ambient && u.basis.at(i, pc) == 0) ++pc;
        piv[i] = pc;
    }
    Mat r = mat_make(F, d, d);
    for (std::uint32_t i = 0; i < d; ++i) {
        std::vector<felem> v(u.ambient);
        for (std::uint32_t j = 0; j < u.ambient; ++j) v[j] = u.basis.at(i, j);
        std::vector<felem> w = mat_apply(a, v);
        // coordinates of w in the RREF basis are its pivot components
        std::vector<felem> residual = w;
        for (std::uint32_t k = 0; k < d; ++k) {
            felem c = w[piv[k]];
            r.at(k, i) = c;
            if (!c) continue;
            for (std::uint32_t j = 0; j < u.ambient; ++j)
                residual[j] = F.sub(residual[j], F.mul(c, u.basis.at(k, j)));
        }
        for (felem x : residual)
            if (x) fail(errc::bad_argument, "subspace is not invariant");
    }
    return r;
}

Mat quotient_action(const Subspace& u, const Mat& a) {
    const Field& F = *a.f;
    std::uint32_t amb = u.ambient;
    std::vector<std::uint32_t> piv(u.dim());
    for (std::uint32_t i = 0; i < u.dim(); ++i) {
        std::uint32_t pc = 0;
        while (pc < amb && u.basis.at(i, pc) == 0) ++pc;
        piv[i] = pc;
    }
    std::vector<bool> is_piv(amb, false);
    for (auto pc : piv) is_piv[pc] = true;
    std::vector<std::uint32_t> comp;
    for (std::uint32_t c = 0; c < amb; ++c)
        if (!is_piv[c]) comp.push_back(c);
    std::uint32_t d = std::uint32_t(comp.size());
    Mat r = mat_make(F, d, d);
    for (std::uint32_t jc = 0; jc < d; ++jc) {
        std::vector<felem> v(amb, 0);
        v[comp[jc]] = 1;
        std::vector<felem> w = mat_apply(a, v);
        // reduce modulo u
        for (std::uint32_t k = 0; k < u.dim(); ++k) {
            felem c = w[piv[k]];
            if (!c) continue;
            for (std::uint32_t j = 0; j < amb; ++j)
                w[j] = F.sub(w[j], F.mul(c, u.basis.at(k, j)));
        }
        for (std::uint32_t ic = 0; ic < d; ++ic) r.at(ic, jc) = w[comp[ic]];
    }
    return r;
}

GModule ad0_submodule(const GModule& ad) {
    Subspace u = ad0_subspace(ad);
    GModule out{ad.f, u.dim(), {}, "ad0"};
    for (const Mat& a : ad.action) out.action.push_back(restrict_action(u, a));
    return out;
}

Mat module_action_of(const GModule& m, const EnumeratedGroup& g, std::uint32_t idx) {
    // multiply along the BFS word
    std::vector<std::uint32_t> word;
    while (idx != 0) {
        word.push_back(g.parent[idx].second);
        idx = g.parent[idx].first;
    }
    Mat r = mat_identity(*m.f, m.dim);
    for (std::size_t i = word.size(); i-- > 0;) r = mat_mul(r, m.action[word[i]]);
    return r;
}

namespace {

// echelon accumulator for spinning
struct Echelon {
    const Field* f;
    std::uint32_t ambient;
    std::vector<std::vector<felem>> rows; // each with leading 1, pivots distinct
    std::vector<std::uint32_t> piv;

    // reduce v; returns true (and keeps it) if independent
    bool add(std::vector<felem> v) {
        const Field& F = *f;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            felem c = v[piv[i]];
            if (!c) continue;
            for (std::uint32_t j = 0; j < ambient; ++j)
                v[j] = F.sub(v[j], F.mul(c, rows[i][j]));
        }
        std::uint32_t pc = 0;
        while (pc < ambient && v[pc] == 0) ++pc;
        if (pc == ambient) return false;
        felem li = F.inv(v[pc]);
        for (std::uint32_t j = 0; j < ambient; ++j) v[j] = F.mul(v[j], li);
        rows.push_back(std::move(v));
        piv.push_back(pc);
        return true;
    }

    Subspace to_subspace() const {
        Mat m = mat_make(*f, std::uint32_t(rows.size()), ambient);
        for (std::uint32_t i = 0; i < rows.size(); ++i)
            for (std::uint32_t j = 0; j < ambient; ++j) m.at(i, j) = rows[i][j];
        return row_space(std::move(m));
    }
};

Subspace spin_vec(const std::vector<Mat>& actions, const Field& F, std::uint32_t dim,
                  std::vector<felem> v) {
    Echelon ech{&F, dim, {}, {}};
    std::vector<std::vector<felem>> queue;
    if (ech.add(v)) queue.push_back(ech.rows.back());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<felem> cur = queue[qi];
        for (const Mat& a : actions) {
            std::vector<felem> w = mat_apply(a, cur);
            if (ech.add(w)) queue.push_back(ech.rows.back());
        }
        if (ech.rows.size() == dim) break;
    }
    return ech.to_subspace();
}

struct ChopOutcome {
    bool certified_irreducible = false;
    bool found = false;
    Subspace submodule;
};

ChopOutcome chop_once(const GModule& m, const EnumeratedGroup& g, std::mt19937_64& rng) {
    const Field& F = *m.f;
    std::uint32_t d = m.dim;
    ChopOutcome out;
    // random element of the group-algebra image: combination of up to 4
    // random group elements
    Mat theta = mat_make(F, d, d);
    for (int t = 0; t < 4; ++t) {
        std::uint32_t idx = std::uint32_t(rng() % g.order());
        felem c = felem(rng() % F.q);
        if (!c) continue;
        theta = mat_add(theta, mat_scale(module_action_of(m, g, idx), c));
    }
    if (theta.is_zero()) return out;
    Poly cp = charpoly(theta);
    auto fac = poly_factor(cp, rng());
    std::vector<Mat> trans_actions;
    for (auto& [p, mult] : fac) {
        Mat pth = poly_at_mat(p, theta);
        Subspace K = kernel(pth);
        if (K.dim() == 0) continue;
        if (mult == 1) {
            // Norton: one spin on each side decides
            std::vector<felem> v(K.basis.a.begin(), K.basis.a.begin() + K.ambient);
            Subspace S = spin_vec(m.action, F, d, v);
            if (S.dim() < d) {
                out.found = true;
                out.submodule = std::move(S);
                return out;
            }
            if (trans_actions.empty())
                for (const Mat& a : m.action) trans_actions.push_back(mat_transpose(a));
            Subspace Kd = kernel(mat_transpose(pth));
            std::vector<felem> vd(Kd.basis.a.begin(), Kd.basis.a.begin() + Kd.ambient);
            Subspace Sd = spin_vec(trans_actions, F, d, vd);
            if (Sd.dim() < d) {
                // annihilator of the dual submodule is a proper submodule
                out.found = true;
                out.submodule = kernel(Sd.basis);
                return out;
            }
            out.certified_irreducible = true;
            return out;
        }
        // higher multiplicity: spinning kernel vectors may still expose a
        // submodule, but a full spin certifies nothing
        for (std::uint32_t i = 0; i < K.dim(); ++i) {
            std::vector<felem> v(K.basis.a.begin() + std::size_t(i) * K.ambient,
                                 K.basis.a.begin() + std::size_t(i + 1) * K.ambient);
            Subspace S = spin_vec(m.action, F, d, v);
            if (S.dim() < d) {
                out.found = true;
                out.submodule = std::move(S);
                return out;
            }
        }
    }
    return out;
}

ChopOutcome chop(const GModule& m, const EnumeratedGroup& g, std::mt19937_64& rng, int budget) {
    if (m.dim == 1) return ChopOutcome{true, false, {}};
    for (int i = 0; i < budget; ++i) {
        ChopOutcome out = chop_once(m, g, rng);
        if (out.certified_irreducible || out.found) return out;
    }
    fail(errc::chop_budget_exceeded,
         "meataxe: no irreducibility certificate within " + std::to_string(budget) + " attempts");
}

void constituents_rec(const GModule& m, const EnumeratedGroup& g, std::mt19937_64& rng,
                      int budget, std::vector<GModule>& out) {
    if (m.dim == 0) return;
    ChopOutcome c = chop(m, g, rng, budget);
    if (c.certified_irreducible) {
        out.push_back(m);
        return;
    }
    const Subspace& u = c.submodule;
    GModule sub{m.f, u.dim(), {}, m.label + ".s"};
    GModule quo{m.f, m.dim - u.dim(), {}, m.label + ".q"};
    for (const Mat& a : m.action) {
        sub.action.push_back(restrict_action(u, a));
        quo.action.push_back(quotient_action(u, a));
    }
    constituents_rec(sub, g, rng, budget, out);
    constituents_rec(quo, g, rng, budget, out);
}

} // namespace

bool is_irreducible(const GModule& m, const EnumeratedGroup& g, std::uint64_t seed, int budget) {
    std::mt19937_64 rng(seed ^ 0xA5A5A5A55A5A5A5AULL);
    return chop(m, g, rng, budget).certified_irreducible;
}

std::uint32_t endomorphism_dim(const GModule& m) {
    const Field& F = *m.f;
    std::uint32_t d = m.dim;
    if (m.action.empty()) return d * d;
    // unknowns X (d x d) row-major; equations X A - A X = 0 per generator
    Mat sys = mat_make(F, std::uint32_t(m.action.size()) * d * d, d * d);
    std::uint32_t row = 0;
    for (const Mat& a : m.action) {
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t j = 0; j < d; ++j) {
                // (X A)_ij - (A X)_ij = sum_k X_ik A_kj - A_ik X_kj
                for (std::uint32_t k = 0; k < d; ++k) {
                    sys.at(row, i * d + k) = F.add(sys.at(row, i * d + k), a.at(k, j));
                    sys.at(row, k * d + j) = F.sub(sys.at(row, k * d + j), a.at(i, k));
                }
                ++row;
            }
    }
    return kernel(sys).dim();
}

bool is_absolutely_irreducible(const GModule& m, const EnumeratedGroup& g, std::uint64_t seed,
                               int budget) {
    return endomorphism_dim(m) == 1 && is_irreducible(m, g, seed, budget);
}

std::vector<GModule> simple_constituents(const GModule& m, const EnumeratedGroup& g,
                                         std::uint64_t seed, int budget) {
    std::mt19937_64 rng(seed ^ 0xC3C3C3C33C3C3C3CULL);
    std::vector<GModule> out;
    constituents_rec(m, g, rng, budget, out);
    return out;
}

std::vector<Mat> hom_space(const GModule& s, const GModule& m) {
    if (s.f != m.f) fail(errc::ctx_mismatch, "modules over different fields");
    if (s.action.size() != m.action.size()) fail(errc::bad_argument, "generator count mismatch");
    const Field& F = *m.f;
    std::uint32_t ds = s.dim, dm = m.dim;
    // unknowns X (dm x ds) row-major with X A_s = A_m X
    std::uint32_t ngen = std::uint32_t(s.action.size());
    Mat sys = mat_make(F, ngen * dm * ds, dm * ds);
    std::uint32_t row = 0;
    for (std::uint32_t si = 0; si < ngen; ++si) {
        const Mat& as = s.action[si];
        const Mat& am = m.action[si];
        for (std::uint32_t i = 0; i < dm; ++i)
            for (std::uint32_t j = 0; j < ds; ++j) {
                // (X As)_ij - (Am X)_ij
                for (std::uint32_t k = 0; k < ds; ++k)
                    sys.at(row, i * ds + k) = F.add(sys.at(row, i * ds + k), as.at(k, j));
                for (std::uint32_t k = 0; k < dm; ++k)
                    sys.at(row, k * ds + j) = F.sub(sys.at(row, k * ds + j), am.at(i, k));
                ++row;
            }
    }
    Subspace sol = kernel(sys);
    std::vector<Mat> basis;
    for (std::uint32_t i = 0; i < sol.dim(); ++i) {
        Mat x = mat_make(F, dm, ds);
        for (std::uint32_t j = 0; j < dm * ds; ++j) x.a[j] = sol.basis.at(i, j);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<Subspace> irreducible_submodules(const GModule& m, const EnumeratedGroup& g,
                                             std::size_t cap, std::uint64_t seed, int budget) {
    const Field& F = *m.f;
    auto cons = simple_constituents(m, g, seed, budget);
    // deduplicate isomorphism classes
    std::vector<GModule> classes;
    for (auto& c : cons) {
        bool known = false;
        for (auto& k : classes) {
            if (k.dim != c.dim) continue;
            if (!hom_space(c, k).empty()) {
                known = true;
                break;
            }
        }
        if (!known) classes.push_back(c);
    }
    std::set<Subspace, bool (*)(const Subspace&, const Subspace&)> dedup(&subspace_less);
    for (auto& s : classes) {
        auto H = hom_space(s, m);
        std::size_t h = H.size();
        if (h == 0) continue;
        // projective representatives: count (q^h - 1)/(q - 1)
        double count = (std::pow(double(F.q), double(h)) - 1) / double(F.q - 1);
        if (count > double(cap))
            fail(errc::too_many_submodules,
                 "isotypic Hom space of dimension " + std::to_string(h) + " exceeds cap");
        // enumerate normalized coefficient vectors (first nonzero entry = 1)
        std::vector<felem> coef(h, 0);
        for (std::size_t lead = 0; lead < h; ++lead) {
            std::fill(coef.begin(), coef.end(), 0);
            coef[lead] = 1;
            // odometer over positions lead+1..h-1
            for (;;) {
                Mat phi = mat_make(F, m.dim, s.dim);
                for (std::size_t i = lead; i < h; ++i)
                    if (coef[i]) phi = mat_add(phi, mat_scale(H[i], coef[i]));
                if (!phi.is_zero()) dedup.insert(row_space(mat_transpose(phi)));
                std::size_t pos = h;
                bool done = true;
                while (pos-- > lead + 1) {
                    coef[pos] = felem((std::uint64_t(coef[pos]) + 1) % F.q);
                    if (coef[pos] != 0) {
                        done = false;
                        break;
                    }
                }
                if (done) break;
            }
        }
    }
    return std::vector<Subspace>(dedup.begin(), dedup.end());
}

GModule module_embed(const GModule& m, const Field& dst) {
    GModule out{&dst, m.dim, {}, m.label};
    for (const Mat& a : m.action) out.action.push_back(mat_embed(a, dst));
    return out;
}

} // namespace mbig
