#include "mbig/linalg.hpp"

#include <algorithm>

namespace mbig {

namespace {

void check_same(const Mat& x, const Mat& y) {
    if (x.f != y.f) fail(errc::ctx_mismatch, "matrices over different fields");
}

} // namespace

Mat mat_make(const Field& f, std::uint32_t rows, std::uint32_t cols) {
    return Mat{&f, rows, cols, std::vector<felem>(std::size_t(rows) * cols, 0)};
}

Mat mat_identity(const Field& f, std::uint32_t n) { return mat_scalar(f, n, 1); }

Mat mat_scalar(const Field& f, std::uint32_t n, felem c) {
    Mat m = mat_make(f, n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    check_same(x, y);
    if (x.cols != y.rows) fail(errc::bad_argument, "matrix dimension mismatch");
    const Field& F = *x.f;
    Mat r = mat_make(F, x.rows, y.cols);
    for (std::uint32_t i = 0; i < x.rows; ++i)
        for (std::uint32_t k = 0; k < x.cols; ++k) {
            felem xik = x.at(i, k);
            if (!xik) continue;
            for (std::uint32_t j = 0; j < y.cols; ++j) {
                felem yv = y.at(k, j);
                if (yv) r.at(i, j) = F.add(r.at(i, j), F.mul(xik, yv));
            }
        }
    return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
    check_same(x, y);
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::bad_argument, "matrix dimension mismatch");
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.f->add(x.a[i], y.a[i]);
    return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
    check_same(x, y);
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::bad_argument, "matrix dimension mismatch");
    Mat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.f->sub(x.a[i], y.a[i]);
    return r;
}

Mat mat_scale(const Mat& x, felem c) {
    Mat r = x;
    for (auto& v : r.a) v = x.f->mul(v, c);
    return r;
}

Mat mat_transpose(const Mat& x) {
    Mat r = mat_make(*x.f, x.cols, x.rows);
    for (std::uint32_t i = 0; i < x.rows; ++i)
        for (std::uint32_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Mat mat_pow(Mat x, std::uint32_t n) {
    if (!x.is_square()) fail(errc::not_square, "mat_pow requires a square matrix");
    Mat r = mat_identity(*x.f, x.rows);
    while (n) {
        if (n & 1) r = mat_mul(r, x);
        x = mat_mul(x, x);
        n >>= 1;
    }
    return r;
}

std::vector<felem> mat_apply(const Mat& x, std::span<const felem> v) {
    if (v.size() != x.cols) fail(errc::bad_argument, "vector length mismatch");
    const Field& F = *x.f;
    std::vector<felem> r(x.rows, 0);
    for (std::uint32_t i = 0; i < x.rows; ++i) {
        felem acc = 0;
        for (std::uint32_t j = 0; j < x.cols; ++j)
            if (x.at(i, j) && v[j]) acc = F.add(acc, F.mul(x.at(i, j), v[j]));
        r[i] = acc;
    }
    return r;
}

felem mat_trace(const Mat& x) {
    if (!x.is_square()) fail(errc::not_square, "trace requires a square matrix");
    felem t = 0;
    for (std::uint32_t i = 0; i < x.rows; ++i) t = x.f->add(t, x.at(i, i));
    return t;
}

Mat mat_embed(const Mat& x, const Field& dst) {
    Mat r = mat_make(dst, x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = embed(*x.f, dst, x.a[i]);
    return r;
}

std::uint32_t rref(Mat& m, std::vector<std::uint32_t>* pivots) {
    const Field& F = *m.f;
    if (pivots) pivots->clear();
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::uint32_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::uint32_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        felem li = F.inv(m.at(rank, col));
        for (std::uint32_t j = col; j < m.cols; ++j) m.at(rank, j) = F.mul(m.at(rank, j), li);
        for (std::uint32_t i = 0; i < m.rows; ++i) {
            if (i == rank) continue;
            felem c = m.at(i, col);
            if (!c) continue;
            for (std::uint32_t j = col; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(rank, j)));
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

Mat mat_inverse(const Mat& x) {
    if (!x.is_square()) fail(errc::not_square, "inverse requires a square matrix");
    const Field& F = *x.f;
    std::uint32_t n = x.rows;
    Mat aug = mat_make(F, n, 2 * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<std::uint32_t> piv;
    std::uint32_t rank = rref(aug, &piv);
    if (rank < n || piv[n - 1] != n - 1) fail(errc::not_invertible, "matrix is singular");
    Mat r = mat_make(F, n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

bool mat_invertible(const Mat& x) {
    if (!x.is_square()) return false;
    Mat c = x;
    return rref(c) == x.rows;
}

Subspace row_space(Mat m) {
    std::uint32_t ambient = m.cols;
    std::uint32_t rank = rref(m);
    Mat basis = mat_make(*m.f, rank, ambient);
    std::copy(m.a.begin(), m.a.begin() + std::size_t(rank) * ambient, basis.a.begin());
    return Subspace{ambient, std::move(basis)};
}

Subspace kernel(const Mat& m) {
    const Field& F = *m.f;
    Mat r = m;
    std::vector<std::uint32_t> piv;
    std::uint32_t rank = rref(r, &piv);
    std::vector<std::uint32_t> free_cols;
    {
        std::size_t pi = 0;
        for (std::uint32_t c = 0; c < m.cols; ++c) {
            if (pi < piv.size() && piv[pi] == c) {
                ++pi;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    Mat basis = mat_make(F, std::uint32_t(free_cols.size()), m.cols);
    for (std::uint32_t k = 0; k < free_cols.size(); ++k) {
        std::uint32_t fc = free_cols[k];
        basis.at(k, fc) = 1;
        for (std::uint32_t i = 0; i < rank; ++i) basis.at(k, piv[i]) = F.neg(r.at(i, fc));
    }
    // canonicalize
    return row_space(std::move(basis));
}

Subspace full_space(const Field& f, std::uint32_t n) { return Subspace{n, mat_identity(f, n)}; }
Subspace zero_space(const Field& f, std::uint32_t n) { return Subspace{n, mat_make(f, 0, n)}; }

bool subspace_contains(const Subspace& s, std::span<const felem> v) {
    if (v.size() != s.ambient) fail(errc::bad_argument, "vector length mismatch");
    const Field& F = *s.basis.f;
    std::vector<felem> w(v.begin(), v.end());
    for (std::uint32_t i = 0; i < s.basis.rows; ++i) {
        // pivot of row i
        std::uint32_t pc = 0;
        while (pc < s.ambient && s.basis.at(i, pc) == 0) ++pc;
        if (pc == s.ambient) continue;
        felem c = w[pc];
        if (!c) continue;
        for (std::uint32_t j = pc; j < s.ambient; ++j)
            w[j] = F.sub(w[j], F.mul(c, s.basis.at(i, j)));
    }
    for (felem x : w)
        if (x) return false;
    return true;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) return a.ambient < b.ambient;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    const Field* F = a.basis.f;
    for (std::size_t i = 0; i < a.basis.a.size(); ++i) {
        std::uint64_t ka = F->lex_key(a.basis.a[i]);
        std::uint64_t kb = F->lex_key(b.basis.a[i]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

Poly charpoly(const Mat& g) {
    if (!g.is_square()) fail(errc::not_square, "charpoly requires a square matrix");
    const Field& F = *g.f;
    std::uint32_t n = g.rows;
    if (n == 0) return poly_one(F);
    // Berkowitz: iterate over leading principal submatrices, convolving with
    // the Toeplitz column (1, -a_rr, -R S, -R M S, -R M^2 S, ...).
    std::vector<felem> v = {1, F.neg(g.at(0, 0))}; // charpoly of the 1x1 block, leading first
    for (std::uint32_t r = 1; r < n; ++r) {
        // t[0..r+1]
        std::vector<felem> t(r + 2, 0);
        t[0] = 1;
        t[1] = F.neg(g.at(r, r));
        std::vector<felem> col(r); // S, then M^j S
        for (std::uint32_t i = 0; i < r; ++i) col[i] = g.at(i, r);
        for (std::uint32_t j = 2; j <= r + 1; ++j) {
            felem dot = 0;
            for (std::uint32_t i = 0; i < r; ++i)
                dot = F.add(dot, F.mul(g.at(r, i), col[i]));
            t[j] = F.neg(dot);
            if (j <= r) {
                std::vector<felem> next(r, 0);
                for (std::uint32_t i = 0; i < r; ++i) {
                    felem acc = 0;
                    for (std::uint32_t k2 = 0; k2 < r; ++k2)
                        acc = F.add(acc, F.mul(g.at(i, k2), col[k2]));
                    next[i] = acc;
                }
                col = std::move(next);
            }
        }
        std::vector<felem> nv(v.size() + 1, 0);
        for (std::size_t i = 0; i < nv.size(); ++i) {
            felem acc = 0;
            for (std::size_t j = 0; j <= i && j < t.size(); ++j) {
                if (i - j < v.size()) acc = F.add(acc, F.mul(t[j], v[i - j]));
            }
            nv[i] = acc;
        }
        v = std::move(nv);
    }
    // v holds coefficients leading-first: p(x) = sum v[i] x^(n-i)
    std::vector<felem> c(n + 1);
    for (std::uint32_t i = 0; i <= n; ++i) c[n - i] = v[i];
    return poly_make(F, std::move(c));
}

Subspace generalized_eigenspace(const Mat& g, felem alpha) {
    if (!g.is_square()) fail(errc::not_square, "generalized eigenspace requires a square matrix");
    Mat shifted = mat_sub(g, mat_scalar(*g.f, g.rows, alpha));
    return kernel(mat_pow(shifted, g.rows));
}

Mat poly_at_mat(const Poly& p, const Mat& g) {
    if (!g.is_square()) fail(errc::not_square, "polynomial evaluation requires a square matrix");
    if (p.f != g.f) fail(errc::ctx_mismatch, "polynomial and matrix over different fields");
    const Field& F = *g.f;
    Mat r = mat_make(F, g.rows, g.rows);
    for (std::size_t i = p.c.size(); i-- > 0;) {
        r = mat_mul(r, g);
        r = mat_add(r, mat_scalar(F, g.rows, p.c[i]));
    }
    return r;
}

Mat spectral_projector(const Mat& g, felem alpha) {
    const Field& F = *g.f;
    Poly h = charpoly(g);
    int mult = root_multiplicity(h, F, alpha);
    if (mult == 0) fail(errc::not_an_eigenvalue, "alpha is not an eigenvalue");
    Poly q1 = poly_pow(poly_linear_root(F, alpha), std::uint32_t(mult));
    Poly q2 = poly_divrem(h, q1).first;
    // projector = q2 * (q2^{-1} mod q1) evaluated at g: congruent to 1 mod q1
    // and 0 mod q2
    Poly s, t;
    Poly gden = poly_ext_gcd(q2, q1, s, t); // s*q2 + t*q1 = 1
    if (gden.deg() != 0) fail(errc::bad_argument, "projector CRT: factors not coprime");
    Poly proj = poly_mul(q2, s);
    proj = poly_mod(proj, h); // degree < n
    return poly_at_mat(proj, g);
}

} // namespace mbig
