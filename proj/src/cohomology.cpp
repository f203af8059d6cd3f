#include "mbig/cohomology.hpp"

namespace mbig {

Subspace fixed_subspace(const EnumeratedGroup& g, const GModule& m) {
    const Field& F = *m.f;
    std::uint32_t d = m.dim;
    if (m.action.empty()) return full_space(F, d);
    // a vector fixed by every generator is fixed by G
    Mat stacked = mat_make(F, std::uint32_t(m.action.size()) * d, d);
    std::uint32_t row = 0;
    for (const Mat& a : m.action) {
        for (std::uint32_t i = 0; i < d; ++i, ++row)
            for (std::uint32_t j = 0; j < d; ++j)
                stacked.at(row, j) = F.sub(a.at(i, j), i == j ? felem(1) : felem(0));
    }
    return kernel(stacked);
}

namespace {

// echelon accumulator over at most `width` columns, tracking rank only
struct RankAccum {
    const Field* f;
    std::uint32_t width;
    std::vector<std::vector<felem>> rows;
    std::vector<std::uint32_t> piv;

    void add(std::vector<felem> v) {
        const Field& F = *f;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            felem c = v[piv[i]];
            if (!c) continue;
            for (std::uint32_t j = piv[i]; j < width; ++j)
                v[j] = F.sub(v[j], F.mul(c, rows[i][j]));
        }
        std::uint32_t pc = 0;
        while (pc < width && v[pc] == 0) ++pc;
        if (pc == width) return;
        felem li = F.inv(v[pc]);
        for (std::uint32_t j = pc; j < width; ++j) v[j] = F.mul(v[j], li);
        rows.push_back(std::move(v));
        piv.push_back(pc);
    }

    std::uint32_t rank() const { return std::uint32_t(rows.size()); }
};

} // namespace

std::uint32_t h1_dim(const EnumeratedGroup& g, const GModule& m, bool force_full,
                     std::size_t budget) {
    const Field& F = *m.f;
    std::uint32_t d = m.dim;
    if (!force_full && g.order() % F.p != 0) return 0;
    if (g.order() * d > budget)
        fail(errc::system_too_large, "cocycle system size " + std::to_string(g.order() * d) +
                                         " exceeds budget " + std::to_string(budget));
    std::uint32_t ngen = std::uint32_t(m.action.size());
    std::uint32_t width = ngen * d; // unknowns: f(s) for each generator s
    if (width == 0) return 0;

    // L[x] expresses f(x) in the generator values: f(xs) = f(x) + rho(x) f(s),
    // so walking the BFS tree defines every L[x], and each non-tree Cayley
    // edge contributes d consistency rows to the cocycle system.
    std::vector<Mat> L(g.order()), rho(g.order());
    std::vector<bool> defined(g.order(), false);
    L[0] = mat_make(F, d, width);
    rho[0] = mat_identity(F, d);
    defined[0] = true;
    RankAccum acc{&F, width, {}, {}};
    for (std::uint32_t i = 0; i < g.order(); ++i) {
        for (std::uint32_t s = 0; s < ngen; ++s) {
            std::uint32_t j = g.edge[s][i];
            if (!defined[j] && g.parent[j] == std::make_pair(i, s)) {
                L[j] = L[i];
                for (std::uint32_t r = 0; r < d; ++r)
                    for (std::uint32_t c = 0; c < d; ++c)
                        L[j].at(r, std::size_t(s) * d + c) =
                            F.add(L[j].at(r, std::size_t(s) * d + c), rho[i].at(r, c));
                rho[j] = mat_mul(rho[i], m.action[s]);
                defined[j] = true;
                continue;
            }
            // constraint: L[i] + rho(i) E_s - L[j] = 0
            for (std::uint32_t r = 0; r < d; ++r) {
                std::vector<felem> row(width, 0);
                bool nonzero = false;
                for (std::uint32_t c = 0; c < width; ++c) {
                    felem v = F.sub(L[i].at(r, c), L[j].at(r, c));
                    if (c / d == s) v = F.add(v, rho[i].at(r, c % d));
                    row[c] = v;
                    nonzero |= v != 0;
                }
                if (nonzero) acc.add(std::move(row));
            }
        }
        if (acc.rank() == width) break; // Z^1 already pinned to zero
    }
    std::uint32_t z1 = width - acc.rank();
    std::uint32_t b1 = d - fixed_subspace(g, m).dim();
    return z1 - b1;
}

} // namespace mbig
