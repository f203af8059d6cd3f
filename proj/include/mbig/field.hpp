#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mbig/error.hpp"

namespace mbig {

// Packed element of GF(p^e): value = c0 + c1*p + ... + c_{e-1}*p^{e-1}
// with c_i the polynomial-basis coordinates modulo the canonical modulus.
using felem = std::uint32_t;

class Field {
public:
    // Canonical context for GF(p^e).  Contexts are interned: equal (p, e)
    // always yields the same object, so pointer equality is context equality.
    static const Field& get(std::uint32_t p, std::uint32_t e);

    std::uint32_t p;
    std::uint32_t e;
    std::uint64_t q; // p^e
    // Monic modulus, length e+1, coefficients in [0,p), low degree first.
    // The lexicographically least monic irreducible of degree e over GF(p)
    // (coefficients compared low-degree-first).  For e = 1 this is x.
    std::vector<std::uint32_t> modulus;

    bool prime_field() const { return e == 1; }

    felem zero() const { return 0; }
    felem one() const { return 1; }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;
    felem div(felem a, felem b) const { return mul(a, inv(b)); }
    felem pow(felem a, std::int64_t n) const;

    // Reduce a signed integer into the prime subfield.
    felem from_int(std::int64_t v) const;

    std::vector<std::uint32_t> coeffs(felem a) const;
    felem from_coeffs(const std::vector<std::uint32_t>& c) const;

    // Least d >= 1 with a^d = 1; divides q-1.  Errors on a = 0.
    std::uint32_t mult_order(felem a) const;

    // Least primitive element in low-degree-first lexicographic order.
    felem generator() const;

    // Discrete log base generator(); a must be nonzero.
    std::uint32_t dlog(felem a) const;

    // Key that orders elements lexicographically by coefficient vector,
    // low-degree coefficient most significant.
    std::uint64_t lex_key(felem a) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(std::uint32_t p, std::uint32_t e);
    void build_tables() const;
    felem mul_raw(felem a, felem b) const;
    std::uint32_t mult_order_nocache(felem a) const;

    mutable std::vector<felem> exp_; // exp_[i] = g^i, size q-1 (small fields only)
    mutable std::vector<std::uint32_t> log_;
    mutable felem gen_ = 0;
    mutable bool tables_built_ = false;
    std::vector<std::uint64_t> qm1_factors_; // distinct prime factors of q-1
};

// Ring embedding GF(p^e) -> GF(p^(e*d)), determined by sending the source
// generator to the lexicographically least root of the source modulus.
// Errors with NoEmbedding when src.p != dst.p or src.e does not divide dst.e.
felem embed(const Field& src, const Field& dst, felem a);

} // namespace mbig
