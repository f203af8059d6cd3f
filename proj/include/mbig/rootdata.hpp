#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbig/field.hpp"

namespace mbig {

// Integer weight in the character-lattice basis.
using Weight = std::vector<std::int64_t>;

// Split root datum with roots and coroots stored as aligned literal data
// (roots[i] and coroots[i] pair to 2).  The pairing form is the standard
// dot product in these coordinates.
struct RootDatum {
    std::string label;
    std::uint32_t rank = 0;
    std::vector<Weight> roots;
    std::vector<Weight> coroots;
};

// Supported type strings: "A1", "A2", "B2", and 'x'-products ("A1xA1",
// "A1xB2", ...).  Throws BadArgument on anything else.
RootDatum root_datum(const std::string& type);

// <lam, coroot>
std::int64_t pairing(const Weight& lam, const Weight& coroot);

// max |<lam, alpha_v>| over the coroots of d.
std::uint64_t weight_norm(const RootDatum& d, const Weight& lam);

// All lattice weights with norm < n, in lexicographic coordinate order.
std::vector<Weight> weights_below(const RootDatum& d, std::uint32_t n);

// Nonzero pairwise differences of weights_below(d, n), deduplicated; these
// are exactly the weights whose m-th-power kernels obstruct injectivity.
std::vector<Weight> difference_set(const RootDatum& d, std::uint32_t n);

// Point of the split torus T(k) = (k^x)^r.
struct TorusElement {
    const Field* f = nullptr;
    std::vector<felem> coords;
};

constexpr std::uint64_t kDefaultTorusCap = 10000000;

// First g in lexicographic discrete-log order (against the least primitive
// root) with lam -> lam(g)^m injective on weights_below(d, n).
std::optional<TorusElement> find_m_regular(const RootDatum& d, const Field& f, std::uint32_t m,
                                           std::uint32_t n, std::uint64_t cap = kDefaultTorusCap);

// lam(g) for g in T(k).
felem weight_value(const Field& f, const Weight& lam, const std::vector<felem>& coords);

// Exact |ker lam ∩ T(k)| = (q-1)^(r-1) * gcd(gcd of coords, q-1).
std::uint64_t kernel_count(const RootDatum& d, const Field& f, const Weight& lam);

// Exact accounting of the torus covering argument at one (q, m, n).
struct AuditReport {
    std::uint64_t torus_size = 0;  // (q-1)^r
    std::uint64_t n_weights = 0;   // N = |S|, S = weights_below(2n) \ {0}
    std::uint64_t r_mq = 0;        // gcd(m, q-1)
    std::uint64_t max_kernel = 0;  // M = max kernel_count over S
    bool bound_holds = false;      // (q-1)^r > N * R * M
    std::uint64_t union_s = 0;     // |∪_{lam in S} ker lam^m|
    std::uint64_t union_diff = 0;  // same union over the difference set
    bool uncovered = false;        // torus_size > union_diff: an m-regular
                                   // element exists iff this is true
};

AuditReport audit_bounds(const RootDatum& d, const Field& f, std::uint32_t m, std::uint32_t n,
                         std::uint64_t cap = kDefaultTorusCap);

} // namespace mbig
