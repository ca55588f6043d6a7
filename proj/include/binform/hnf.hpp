#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "binform/matrix.hpp"

namespace binform {

namespace detail {

// Core column reduction.  Applies unimodular column operations to `a`
// (mirrored on `u` when given) so that afterwards the pivot column for each
// nonzero row sits to the right of every still-active column and the active
// columns are zero on all processed rows.  Returns the pivot positions as
// (row, col) pairs ordered bottom row first; active (kernel) columns end up
// at positions 0..k-rank-1.
inline std::vector<std::pair<std::size_t, std::size_t>> triangularize_columns(
    IntMat& a, IntMat* u) {
    const std::size_t m = a.rows(), k = a.cols();
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < m; ++i) a(i, dst) -= q * a(i, src);
        if (u)
            for (std::size_t i = 0; i < u->rows(); ++i) (*u)(i, dst) -= q * (*u)(i, src);
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(a(i, x), a(i, y));
        if (u)
            for (std::size_t i = 0; i < u->rows(); ++i) std::swap((*u)(i, x), (*u)(i, y));
    };
    auto col_negate = [&](std::size_t x) {
        for (std::size_t i = 0; i < m; ++i) a(i, x) = -a(i, x);
        if (u)
            for (std::size_t i = 0; i < u->rows(); ++i) (*u)(i, x) = -(*u)(i, x);
    };

    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t active = k;
    for (std::size_t row = m; row-- > 0;) {
        // Euclidean elimination in this row across active columns.
        while (true) {
            std::size_t best = active;
            for (std::size_t j = 0; j < active; ++j) {
                if (a(row, j) == 0) continue;
                if (best == active ||
                    int_abs(a(row, j)) < int_abs(a(row, best)))
                    best = j;
            }
            if (best == active) break;  // row is zero on active columns
            bool lone = true;
            for (std::size_t j = 0; j < active; ++j) {
                if (j == best || a(row, j) == 0) continue;
                lone = false;
                col_axpy(j, best, fdiv(a(row, j), a(row, best)));
            }
            if (lone) {
                col_swap(best, active - 1);
                --active;
                if (a(row, active) < 0) col_negate(active);
                pivots.emplace_back(row, active);
                break;
            }
        }
    }
    return pivots;
}

}  // namespace detail

/// Column-style Hermite normal form of the lattice spanned by the columns of
/// `m` (any number of columns, required full row rank): the unique square
/// matrix H with H = m·U for unimodular U (after discarding zero columns),
/// upper triangular, positive diagonal, and 0 <= H(i,j) < H(i,i) for j > i.
inline IntMat hnf_span(const IntMat& m) {
    IntMat a = m;
    auto pivots = detail::triangularize_columns(a, nullptr);
    const std::size_t n = a.rows();
    if (pivots.size() != n) throw error("degenerate lattice");
    // pivots are ordered bottom row first and occupy the rightmost columns;
    // pivot of row i sits in column (k - n + i).
    const std::size_t off = a.cols() - n;
    IntMat h(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) h(i, j) = a(i, off + j);
    // reduce off-diagonal entries into [0, pivot)
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = j; i-- > 0;) {
            Int q = fdiv(h(i, j), h(i, i));
            if (q == 0) continue;
            for (std::size_t r = 0; r <= i; ++r) h(r, j) -= q * h(r, i);
        }
    return h;
}

/// HNF of a square nonsingular rational basis, scaled back so that the result
/// times the common denominator of the lattice is an integer HNF.  Two bases
/// of the same lattice map to identical output.
inline RatMat hnf(const RatMat& basis) {
    if (!basis.is_square()) throw error("degenerate lattice");
    auto [z, d] = clear_denominators(basis);
    IntMat h = hnf_span(z);  // throws "degenerate lattice" if singular
    return scale(h, make_rat(1, d));
}

/// HNF basis of the span of a (possibly overdetermined) rational generator
/// set, columns = generators.
inline RatMat hnf_span(const RatMat& gens) {
    auto [z, d] = clear_denominators(gens);
    return scale(hnf_span(z), make_rat(1, d));
}

/// Generalized lattice index [sup : sub] = |det(sup^-1 · sub)|; equals the
/// group index when sub is contained in sup.
inline Rat lattice_index(const RatMat& sub, const RatMat& sup) {
    if (!sub.is_square() || !sup.is_square() || sub.rows() != sup.rows())
        throw error("lattice index dimension mismatch");
    Rat ds = det(sub), dS = det(sup);
    if (ds == 0 || dS == 0) throw error("degenerate lattice");
    return rat_abs(ds / dS);
}

/// Z-basis of {x : m·x = 0} as matrix columns (saturated by construction:
/// the kernel columns of the unimodular transform).  May have zero columns.
inline IntMat kernel_int(const IntMat& m) {
    IntMat a = m;
    IntMat u = IntMat::identity(m.cols());
    auto pivots = detail::triangularize_columns(a, &u);
    const std::size_t null_dim = m.cols() - pivots.size();
    IntMat ker(m.cols(), null_dim);
    for (std::size_t j = 0; j < null_dim; ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) ker(i, j) = u(i, j);
    return ker;
}

/// Pairwise size reduction of lattice basis columns (iterated Lagrange
/// reduction): repeatedly subtracts the rounded projection multiple of one
/// column from another while the Euclidean norm drops.
inline void size_reduce_columns(IntMat& b) {
    const std::size_t m = b.rows(), k = b.cols();
    auto dot = [&](std::size_t x, std::size_t y) {
        Int s(0);
        for (std::size_t i = 0; i < m; ++i) s += b(i, x) * b(i, y);
        return s;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j) continue;
                Int jj = dot(j, j);
                if (jj == 0) continue;
                Int ij = dot(i, j);
                Int q = fdiv(2 * ij + jj, 2 * jj);  // round(ij / jj)
                if (q == 0) continue;
                Int before = dot(i, i);
                for (std::size_t r = 0; r < m; ++r) b(r, i) -= q * b(r, j);
                if (dot(i, i) < before)
                    changed = true;
                else
                    for (std::size_t r = 0; r < m; ++r) b(r, i) += q * b(r, j);
            }
    }
}

/// Saturation of the column span of `m` inside Z^rows: basis of
/// (span_Q(columns) ∩ Z^rows).  Computed as the kernel of the kernel of the
/// transpose.
inline IntMat saturate_columns(const IntMat& m) {
    IntMat orth = kernel_int(m.transpose());
    return kernel_int(orth.transpose());
}

/// {x in Q^n : d_mat · x integral} for a full-column-rank rational matrix,
/// returned as an HNF lattice basis.
inline RatMat integral_preimage_lattice(const RatMat& d_mat) {
    auto [e, d] = clear_denominators(d_mat);
    const std::size_t n = e.cols();
    IntMat w = saturate_columns(e);
    if (w.cols() != n) throw error("degenerate lattice");
    // solve e · x_j = d · w_j; e has full column rank so pick n independent
    // rows via the rational route: x = (e^T e)^-1 e^T (d w)
    RatMat et = to_rat(e.transpose());
    RatMat lhs = et * to_rat(e);
    RatMat rhs = et * scale(w, Rat(d));
    RatMat x = solve(lhs, rhs);
    return hnf(x);
}

}  // namespace binform
