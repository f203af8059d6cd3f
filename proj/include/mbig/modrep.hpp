#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbig/matgroup.hpp"

namespace mbig {

// Finite-dimensional k-space with a G-action given per generator.
struct GModule {
    const Field* f = nullptr;
    std::uint32_t dim = 0;
    std::vector<Mat> action; // one per group generator
    std::string label;
};

GModule standard_module(const EnumeratedGroup& g);

// Conjugation action on End(V), dim n^2, in the elementary-matrix basis
// E11, E12, ..., Enn (row-major).
GModule ad_module(const EnumeratedGroup& g);

// Trace-zero subspace of an adjoint module, with the restricted action.
// When char k divides n the scalars sit inside it; no quotient is taken.
GModule ad0_submodule(const GModule& ad);

// Basis of the trace-zero subspace inside the ad module's coordinates.
Subspace ad0_subspace(const GModule& ad);

// Module action of the group element with the given index (computed along
// the BFS word).
Mat module_action_of(const GModule& m, const EnumeratedGroup& g, std::uint32_t idx);

// Action matrix restricted to an invariant subspace, in the coordinates of
// its canonical basis.  Throws if the subspace is not invariant.
Mat restrict_action(const Subspace& u, const Mat& a);

// Induced action on the quotient by an invariant subspace, in the
// coordinates of the non-pivot standard vectors.
Mat quotient_action(const Subspace& u, const Mat& a);

// Smallest invariant subspace containing v.
Subspace spin(const GModule& m, std::span<const felem> v);

constexpr int kDefaultChopBudget = 200;
constexpr std::size_t kDefaultSubmoduleCap = 10000;

// Meataxe irreducibility with Norton's certificate; throws
// ChopBudgetExceeded when the random attempts are exhausted.
bool is_irreducible(const GModule& m, const EnumeratedGroup& g, std::uint64_t seed = 0,
                    int budget = kDefaultChopBudget);

// Endomorphism algebra dimension: solutions of X rho(s) = rho(s) X.
std::uint32_t endomorphism_dim(const GModule& m);

// Irreducible + one-dimensional endomorphism algebra.
bool is_absolutely_irreducible(const GModule& m, const EnumeratedGroup& g,
                               std::uint64_t seed = 0, int budget = kDefaultChopBudget);

// Composition factors with multiplicity, by Meataxe chopping.
std::vector<GModule> simple_constituents(const GModule& m, const EnumeratedGroup& g,
                                         std::uint64_t seed, int budget = kDefaultChopBudget);

// Basis of Hom_G(s, m) as dim(m) x dim(s) matrices.
std::vector<Mat> hom_space(const GModule& s, const GModule& m);

// The complete list of irreducible submodules, as canonical subspaces of
// the module's coordinate space; errors with TooManySubmodules beyond cap.
std::vector<Subspace> irreducible_submodules(const GModule& m, const EnumeratedGroup& g,
                                             std::size_t cap = kDefaultSubmoduleCap,
                                             std::uint64_t seed = 0,
                                             int budget = kDefaultChopBudget);

GModule module_embed(const GModule& m, const Field& dst);

} // namespace mbig
