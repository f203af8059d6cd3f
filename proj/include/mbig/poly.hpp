#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mbig/field.hpp"

namespace mbig {

// Univariate polynomial over a finite field, low degree first, no trailing
// zeros.  The zero polynomial has an empty coefficient vector.
struct Poly {
    const Field* f = nullptr;
    std::vector<felem> c;

    int deg() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    felem lead() const { return c.back(); }

    bool operator==(const Poly& o) const { return f == o.f && c == o.c; }
};

Poly poly_make(const Field& f, std::vector<felem> coeffs);
Poly poly_zero(const Field& f);
Poly poly_one(const Field& f);
Poly poly_x(const Field& f);
Poly poly_const(const Field& f, felem a);
// x - a
Poly poly_linear_root(const Field& f, felem a);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, felem s);
// quotient, remainder; b nonzero
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b); // monic
Poly poly_monic(const Poly& a);
Poly poly_derivative(const Poly& a);
felem poly_eval(const Poly& a, felem x);
Poly poly_powmod(const Poly& base, std::uint64_t n, const Poly& mod);
// s * a + t * b = g (monic gcd); returns g and sets s
Poly poly_ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
Poly poly_pow(const Poly& a, std::uint32_t n);

// Coefficient-wise embedding into an extension field.
Poly poly_embed(const Poly& a, const Field& dst);

// Full factorization of a monic polynomial of degree >= 1: squarefree
// decomposition, distinct-degree, then seeded equal-degree splitting.
// Result is sorted (degree, then coefficient lex) and deterministic.
std::vector<std::pair<Poly, int>> poly_factor(const Poly& fpoly, std::uint64_t seed);

struct SplitRoots {
    const Field* ext; // splitting field (degree = lcm of factor degrees)
    std::vector<std::pair<felem, int>> roots; // with multiplicity; count = deg
};
SplitRoots roots_in_splitting_field(const Poly& fpoly);

// Multiplicity of (x - a) in f, by repeated exact division.  `af` is the
// field containing a; f is embedded into it when they differ.
int root_multiplicity(const Poly& fpoly, const Field& af, felem a);
bool is_simple_root(const Poly& fpoly, const Field& af, felem a);

} // namespace mbig
