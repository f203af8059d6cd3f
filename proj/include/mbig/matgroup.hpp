#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mbig/linalg.hpp"

namespace mbig {

struct GroupSpec {
    const Field* f = nullptr;
    std::uint32_t n = 0;
    std::vector<Mat> generators;
};

constexpr std::size_t kDefaultElementCap = 2097152;

struct MatKeyHash {
    std::size_t operator()(const std::vector<felem>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (felem x : v) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

// Fully enumerated finite matrix group.  Element order is BFS from the
// identity under right multiplication by the generators (layer, then
// generator index), so indices are reproducible.
struct EnumeratedGroup {
    GroupSpec spec;
    std::vector<Mat> elems; // [0] = identity
    std::unordered_map<std::vector<felem>, std::uint32_t, MatKeyHash> index;
    // edge[s][i] = index of elems[i] * generators[s]
    std::vector<std::vector<std::uint32_t>> edge;
    // parent[i] = (parent index, generator index): elems[i] = elems[p] * gen[s].
    // parent[0] is (0, 0) and unused.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parent;

    std::uint64_t order() const { return elems.size(); }
    std::uint32_t index_of(const Mat& m) const;
    bool contains(const Mat& m) const { return index.find(m.a) != index.end(); }
};

EnumeratedGroup enumerate(const GroupSpec& spec, std::size_t cap = kDefaultElementCap);

// Commutator subgroup [G, G], as the normal closure of the generator
// commutators.
EnumeratedGroup derived_subgroup(const EnumeratedGroup& g, std::size_t cap = kDefaultElementCap);

// True iff G has a nontrivial quotient of l-power order, i.e. l divides the
// order of the abelianization.
bool has_l_power_quotient(const EnumeratedGroup& g, std::uint32_t l);

// Group generated by G and the scalar matrices k^x * I.
EnumeratedGroup scalar_closure(const EnumeratedGroup& g, std::size_t cap = kDefaultElementCap);

// Action of 2x2 generators on the monomial basis x^k, x^(k-1) y, ..., y^k of
// degree-k forms; a homomorphism on generators.
GroupSpec sym_power_generators(const GroupSpec& spec, std::uint32_t k);

// Standard generators of SL2(F_l).
GroupSpec sl2_spec(std::uint32_t l);

} // namespace mbig
