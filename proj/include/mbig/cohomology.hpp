#pragma once

#include <cstdint>

#include "mbig/modrep.hpp"

namespace mbig {

constexpr std::size_t kDefaultCocycleBudget = 10000000;

// Fixed subspace m^G: intersection of the kernels of (rho(s) - I).
Subspace fixed_subspace(const EnumeratedGroup& g, const GModule& m);

// dim_k H^1(G, M) = dim Z^1 - dim B^1, computed exactly.  A cocycle is
// determined by its generator values; the (generator, element) constraints
// pin down consistency, so the solve runs over |S| * dim(M) unknowns.
// Returns 0 immediately when gcd(l, |G|) = 1 unless force_full is set.
// Errors with SystemTooLarge when |G| * dim(M) exceeds the budget.
std::uint32_t h1_dim(const EnumeratedGroup& g, const GModule& m, bool force_full = false,
                     std::size_t budget = kDefaultCocycleBudget);

} // namespace mbig
