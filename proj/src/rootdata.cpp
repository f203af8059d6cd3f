#include "mbig/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mbig {

namespace {

struct Block {
    std::uint32_t rank;
    std::vector<Weight> roots;   // positive half; negatives added on append
    std::vector<Weight> coroots; // aligned with roots
};

Block block_for(const std::string& t) {
    if (t == "A1") return Block{1, {{2}}, {{1}}};
    if (t == "A2")
        return Block{2, {{2, -1}, {-1, 2}, {1, 1}}, {{1, 0}, {0, 1}, {1, 1}}};
    if (t == "B2")
        return Block{2,
                     {{2, -2}, {-1, 2}, {1, 0}, {0, 2}},
                     {{1, 0}, {0, 1}, {2, 1}, {1, 1}}};
    fail(errc::bad_argument, "unsupported root datum type '" + t + "'");
}

Weight shifted(const Weight& v, std::uint32_t offset, std::uint32_t rank) {
    Weight out(rank, 0);
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
}

Weight negated(const Weight& v) {
    Weight out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

} // namespace

RootDatum root_datum(const std::string& type) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= type.size()) {
        std::size_t next = type.find('x', pos);
        if (next == std::string::npos) next = type.size();
        parts.push_back(type.substr(pos, next - pos));
        pos = next + 1;
    }
    std::vector<Block> blocks;
    std::uint32_t rank = 0;
    for (const auto& p : parts) {
        blocks.push_back(block_for(p));
        rank += blocks.back().rank;
    }
    RootDatum d;
    d.label = type;
    d.rank = rank;
    std::uint32_t off = 0;
    for (const Block& b : blocks) {
        for (std::size_t i = 0; i < b.roots.size(); ++i) {
            Weight r = shifted(b.roots[i], off, rank);
            Weight c = shifted(b.coroots[i], off, rank);
            d.roots.push_back(negated(r));
            d.coroots.push_back(negated(c));
            d.roots.push_back(std::move(r));
            d.coroots.push_back(std::move(c));
        }
        off += b.rank;
    }
    return d;
}

std::int64_t pairing(const Weight& lam, const Weight& coroot) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) s += lam[i] * coroot[i];
    return s;
}

std::uint64_t weight_norm(const RootDatum& d, const Weight& lam) {
    std::uint64_t best = 0;
    for (const Weight& c : d.coroots) {
        std::int64_t v = pairing(lam, c);
        best = std::max<std::uint64_t>(best, std::uint64_t(v < 0 ? -v : v));
    }
    return best;
}

std::vector<Weight> weights_below(const RootDatum& d, std::uint32_t n) {
    // Every supported datum carries the standard basis vectors among its
    // coroots, so |lam_j| < n bounds the enumeration box.
    for (std::uint32_t j = 0; j < d.rank; ++j) {
        bool have = false;
        for (const Weight& c : d.coroots) {
            bool unit = true;
            for (std::uint32_t i = 0; i < d.rank; ++i)
                if (c[i] != (i == j ? 1 : 0)) unit = false;
            have |= unit;
        }
        if (!have) fail(errc::not_finite, "coroot lattice misses a basis direction");
    }
    std::int64_t b = std::int64_t(n) - 1;
    std::vector<Weight> out;
    Weight cur(d.rank, -b);
    for (;;) {
        if (weight_norm(d, cur) < n) out.push_back(cur);
        std::size_t i = d.rank;
        while (i-- > 0) {
            if (cur[i] < b) {
                ++cur[i];
                std::fill(cur.begin() + std::ptrdiff_t(i) + 1, cur.end(), -b);
                break;
            }
            if (i == 0) return out;
        }
    }
}

std::vector<Weight> difference_set(const RootDatum& d, std::uint32_t n) {
    auto W = weights_below(d, n);
    std::set<Weight> diffs;
    for (const Weight& a : W)
        for (const Weight& b : W) {
            if (a == b) continue;
            Weight v(d.rank);
            for (std::uint32_t i = 0; i < d.rank; ++i) v[i] = a[i] - b[i];
            diffs.insert(std::move(v));
        }
    return std::vector<Weight>(diffs.begin(), diffs.end());
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// lam evaluated at g = (gen^e_1, ..., gen^e_r), as an exponent of gen
std::uint64_t weight_exponent(const Weight& lam, const std::vector<std::uint64_t>& e,
                              std::uint64_t qm1) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        std::uint64_t li = std::uint64_t(((lam[i] % std::int64_t(qm1)) + std::int64_t(qm1)) %
                                         std::int64_t(qm1));
        s = (s + li * e[i]) % qm1;
    }
    return s;
}

bool next_exponents(std::vector<std::uint64_t>& e, std::uint64_t qm1) {
    std::size_t i = e.size();
    while (i-- > 0) {
        if (++e[i] < qm1) return true;
        e[i] = 0;
    }
    return false;
}

} // namespace

felem weight_value(const Field& f, const Weight& lam, const std::vector<felem>& coords) {
    felem v = 1;
    for (std::size_t i = 0; i < lam.size(); ++i) v = f.mul(v, f.pow(coords[i], lam[i]));
    return v;
}

std::optional<TorusElement> find_m_regular(const RootDatum& d, const Field& f, std::uint32_t m,
                                           std::uint32_t n, std::uint64_t cap) {
    std::uint64_t qm1 = f.q - 1;
    if (pow_u64(qm1, d.rank) > cap)
        fail(errc::search_space_too_large, "torus scan of (q-1)^r elements exceeds cap");
    auto W = weights_below(d, n);
    felem gen = f.generator();
    std::vector<std::uint64_t> e(d.rank, 0);
    std::vector<std::uint64_t> vals(W.size());
    do {
        for (std::size_t i = 0; i < W.size(); ++i)
            vals[i] = weight_exponent(W[i], e, qm1) * m % qm1;
        bool injective = true;
        for (std::size_t i = 0; i < vals.size() && injective; ++i)
            for (std::size_t j = i + 1; j < vals.size(); ++j)
                if (vals[i] == vals[j]) {
                    injective = false;
                    break;
                }
        if (injective) {
            TorusElement t{&f, {}};
            for (std::uint64_t ei : e) t.coords.push_back(f.pow(gen, std::int64_t(ei)));
            return t;
        }
    } while (next_exponents(e, qm1));
    return std::nullopt;
}

std::uint64_t kernel_count(const RootDatum& d, const Field& f, const Weight& lam) {
    std::uint64_t qm1 = f.q - 1;
    // solutions of sum lam_i e_i = 0 mod q-1 on discrete logs
    std::uint64_t g = 0;
    for (std::int64_t c : lam) g = std::gcd(g, std::uint64_t(c < 0 ? -c : c));
    return pow_u64(qm1, d.rank - 1) * std::gcd(g, qm1);
}

AuditReport audit_bounds(const RootDatum& d, const Field& f, std::uint32_t m, std::uint32_t n,
                         std::uint64_t cap) {
    std::uint64_t qm1 = f.q - 1;
    AuditReport rep;
    rep.torus_size = pow_u64(qm1, d.rank);
    if (rep.torus_size > cap)
        fail(errc::search_space_too_large, "torus scan of (q-1)^r elements exceeds cap");
    auto S = weights_below(d, 2 * n);
    std::erase_if(S, [](const Weight& w) {
        return std::all_of(w.begin(), w.end(), [](std::int64_t c) { return c == 0; });
    });
    rep.n_weights = S.size();
    rep.r_mq = std::gcd(std::uint64_t(m), qm1);
    for (const Weight& lam : S) rep.max_kernel = std::max(rep.max_kernel, kernel_count(d, f, lam));
    unsigned __int128 rhs =
        (unsigned __int128)rep.n_weights * rep.r_mq * rep.max_kernel;
    rep.bound_holds = (unsigned __int128)rep.torus_size > rhs;

    // exact unions by direct scan; the difference-set union decides whether
    // an m-regular element exists, the S union is the proof's upper estimate
    auto D = difference_set(d, n);
    std::vector<std::uint64_t> e(d.rank, 0);
    auto covered = [&](const std::vector<Weight>& set) {
        for (const Weight& lam : set)
            if (weight_exponent(lam, e, qm1) * m % qm1 == 0) return true;
        return false;
    };
    do {
        if (covered(S)) ++rep.union_s;
        if (covered(D)) ++rep.union_diff;
    } while (next_exponents(e, qm1));
    rep.uncovered = rep.torus_size > rep.union_diff;
    return rep;
}

} // namespace mbig
