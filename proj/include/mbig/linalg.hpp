#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mbig/field.hpp"
#include "mbig/poly.hpp"

namespace mbig {

// Dense row-major matrix over a finite field.
struct Mat {
    const Field* f = nullptr;
    std::uint32_t rows = 0, cols = 0;
    std::vector<felem> a;

    felem& at(std::uint32_t r, std::uint32_t c) { return a[std::size_t(r) * cols + c]; }
    felem at(std::uint32_t r, std::uint32_t c) const { return a[std::size_t(r) * cols + c]; }
    bool is_square() const { return rows == cols; }
    bool is_zero() const {
        for (felem x : a)
            if (x) return false;
        return true;
    }
    bool operator==(const Mat& o) const {
        return f == o.f && rows == o.rows && cols == o.cols && a == o.a;
    }
};

Mat mat_make(const Field& f, std::uint32_t rows, std::uint32_t cols);
Mat mat_identity(const Field& f, std::uint32_t n);
Mat mat_scalar(const Field& f, std::uint32_t n, felem c);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(const Mat& x, felem c);
Mat mat_transpose(const Mat& x);
Mat mat_pow(Mat x, std::uint32_t n);
// x * v for a column vector v
std::vector<felem> mat_apply(const Mat& x, std::span<const felem> v);
Mat mat_inverse(const Mat& x); // throws NotInvertible
bool mat_invertible(const Mat& x);
Mat mat_embed(const Mat& x, const Field& dst);
felem mat_trace(const Mat& x);

// In-place reduced row echelon form; returns rank, fills pivot columns.
std::uint32_t rref(Mat& m, std::vector<std::uint32_t>* pivots = nullptr);

// Subspace of k^ambient with canonical RREF basis (rows of `basis`).
struct Subspace {
    std::uint32_t ambient = 0;
    Mat basis; // dim x ambient, reduced row echelon form

    std::uint32_t dim() const { return basis.rows; }
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

Subspace row_space(Mat m);
Subspace kernel(const Mat& m); // canonical null space basis
Subspace full_space(const Field& f, std::uint32_t n);
Subspace zero_space(const Field& f, std::uint32_t n);
bool subspace_contains(const Subspace& s, std::span<const felem> v);
bool subspace_less(const Subspace& a, const Subspace& b); // deterministic order

// Characteristic polynomial det(xI - A), monic of degree n, by the
// division-free Berkowitz recursion.
Poly charpoly(const Mat& g);

// Kernel of (g - alpha I)^n.
Subspace generalized_eigenspace(const Mat& g, felem alpha);

// Idempotent projector onto the alpha-generalized eigenspace along the sum
// of the others, via CRT on the characteristic polynomial.
Mat spectral_projector(const Mat& g, felem alpha);

// Evaluate a polynomial at a square matrix (Horner).
Mat poly_at_mat(const Poly& p, const Mat& g);

} // namespace mbig
