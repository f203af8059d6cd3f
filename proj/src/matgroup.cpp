#include "mbig/matgroup.hpp"

#include <algorithm>

namespace mbig {

std::uint32_t EnumeratedGroup::index_of(const Mat& m) const {
    auto it = index.find(m.a);
    if (it == index.end()) fail(errc::bad_argument, "element not in group");
    return it->second;
}

EnumeratedGroup enumerate(const GroupSpec& spec, std::size_t cap) {
    if (!spec.f || spec.n == 0) fail(errc::bad_argument, "empty group spec");
    for (const Mat& g : spec.generators) {
        if (g.f != spec.f) fail(errc::ctx_mismatch, "generator over wrong field");
        if (g.rows != spec.n || g.cols != spec.n) fail(errc::bad_argument, "generator has wrong size");
        if (!mat_invertible(g)) fail(errc::not_invertible, "generator is singular");
    }
    EnumeratedGroup out;
    out.spec = spec;
    out.edge.assign(spec.generators.size(), {});
    Mat id = mat_identity(*spec.f, spec.n);
    out.elems.push_back(id);
    out.index.emplace(id.a, 0);
    out.parent.emplace_back(0, 0);
    for (std::uint32_t i = 0; i < out.elems.size(); ++i) {
        for (std::uint32_t s = 0; s < spec.generators.size(); ++s) {
            Mat m = mat_mul(out.elems[i], spec.generators[s]);
            auto it = out.index.find(m.a);
            std::uint32_t j;
            if (it == out.index.end()) {
                if (out.elems.size() >= cap)
                    fail(errc::group_too_large, "group closure exceeds cap " + std::to_string(cap));
                j = std::uint32_t(out.elems.size());
                out.index.emplace(m.a, j);
                out.elems.push_back(std::move(m));
                out.parent.emplace_back(i, s);
            } else {
                j = it->second;
            }
            out.edge[s].resize(out.elems.size(), 0);
            out.edge[s][i] = j;
        }
    }
    for (auto& e : out.edge) e.resize(out.elems.size());
    return out;
}

EnumeratedGroup derived_subgroup(const EnumeratedGroup& g, std::size_t cap) {
    const GroupSpec& spec = g.spec;
    std::vector<Mat> gen_inv;
    gen_inv.reserve(spec.generators.size());
    for (const Mat& s : spec.generators) gen_inv.push_back(mat_inverse(s));

    Mat id = mat_identity(*spec.f, spec.n);
    std::vector<Mat> K;
    auto push_new = [&](const Mat& m) {
        if (m == id) return false;
        for (const Mat& k : K)
            if (k == m) return false;
        K.push_back(m);
        return true;
    };
    for (std::size_t s = 0; s < spec.generators.size(); ++s)
        for (std::size_t t = 0; t < spec.generators.size(); ++t) {
            if (s == t) continue;
            Mat c = mat_mul(mat_mul(spec.generators[s], spec.generators[t]),
                            mat_mul(gen_inv[s], gen_inv[t]));
            push_new(c);
        }
    // normal closure under conjugation by the ambient generators
    for (;;) {
        EnumeratedGroup sub = enumerate(GroupSpec{spec.f, spec.n, K}, cap);
        bool grew = false;
        std::size_t base = K.size();
        for (std::size_t ki = 0; ki < base; ++ki)
            for (std::size_t s = 0; s < spec.generators.size(); ++s) {
                Mat c = mat_mul(mat_mul(spec.generators[s], K[ki]), gen_inv[s]);
                if (!sub.contains(c)) grew |= push_new(c);
            }
        if (!grew) return sub;
    }
}

bool has_l_power_quotient(const EnumeratedGroup& g, std::uint32_t l) {
    EnumeratedGroup der = derived_subgroup(g);
    std::uint64_t ab = g.order() / der.order();
    return ab % l == 0;
}

EnumeratedGroup scalar_closure(const EnumeratedGroup& g, std::size_t cap) {
    const Field& F = *g.spec.f;
    GroupSpec spec = g.spec;
    if (F.q > 2) spec.generators.push_back(mat_scalar(F, spec.n, F.generator()));
    EnumeratedGroup out = enumerate(spec, cap);
    return out;
}

GroupSpec sym_power_generators(const GroupSpec& spec, std::uint32_t k) {
    if (spec.n != 2) fail(errc::bad_argument, "sym_power_generators requires 2x2 generators");
    const Field& F = *spec.f;
    GroupSpec out{&F, k + 1, {}};
    for (const Mat& g : spec.generators) {
        // substitution x -> g00 x + g01 y, y -> g10 x + g11 y; row i of the
        // result expands x^(k-i) y^i in the monomial basis
        Mat m = mat_make(F, k + 1, k + 1);
        for (std::uint32_t i = 0; i <= k; ++i) {
            // (g00 x + g01 y)^(k-i) * (g10 x + g11 y)^i as a poly in y/x degree
            auto binom_mod = [&](std::uint32_t nn, std::uint32_t kk) {
                std::uint64_t b = 1;
                for (std::uint32_t t = 1; t <= kk; ++t) b = b * (nn - t + 1) / t;
                return F.from_int(std::int64_t(b));
            };
            std::vector<felem> first(k - i + 1), second(i + 1);
            for (std::uint32_t a = 0; a <= k - i; ++a) {
                // coeff of x^(k-i-a) y^a: C(k-i, a) g00^(k-i-a) g01^a
                first[a] = F.mul(binom_mod(k - i, a),
                                 F.mul(F.pow(g.at(0, 0), std::int64_t(k - i - a)),
                                       F.pow(g.at(0, 1), std::int64_t(a))));
            }
            for (std::uint32_t a = 0; a <= i; ++a) {
                second[a] = F.mul(binom_mod(i, a),
                                  F.mul(F.pow(g.at(1, 0), std::int64_t(i - a)),
                                        F.pow(g.at(1, 1), std::int64_t(a))));
            }
            for (std::uint32_t a = 0; a < first.size(); ++a)
                for (std::uint32_t b = 0; b < second.size(); ++b)
                    m.at(i, a + b) = F.add(m.at(i, a + b), F.mul(first[a], second[b]));
        }
        out.generators.push_back(std::move(m));
    }
    return out;
}

GroupSpec sl2_spec(std::uint32_t l) {
    const Field& F = Field::get(l, 1);
    Mat u = mat_identity(F, 2);
    u.at(0, 1) = 1;
    Mat v = mat_identity(F, 2);
    v.at(1, 0) = 1;
    return GroupSpec{&F, 2, {u, v}};
}

} // namespace mbig
