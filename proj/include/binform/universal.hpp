#pragma once

#include <cstddef>
#include <vector>

#include "binform/pairing.hpp"
#include "binform/rng.hpp"
#include "binform/tensor.hpp"

namespace binform {

/// Integer specialization of the universal 2 x n x n tensor with entries
/// u_{ijk}, plus optional vectors x (length 2) and y (length n).
struct Specialization {
    Tensor tensor;
    std::vector<Int> x;  // empty or length 2
    std::vector<Int> y;  // empty or length n

    explicit Specialization(Tensor t) : tensor(std::move(t)) {
        if (tensor.n() < 2) throw error("specialization needs n >= 2");
    }

    std::size_t n() const { return tensor.n(); }

    const Int& u(std::size_t i, std::size_t j, std::size_t k) const {  // 1-based aisle
        return i == 1 ? tensor.a1(j, k) : tensor.a2(j, k);
    }

    /// C(y)_{i,k} = sum_j u_{ijk} y_j  (1-based aisle index i).
    Int cy(std::size_t i, std::size_t k) const {
        Int s(0);
        for (std::size_t j = 0; j < n(); ++j) s += u(i, j, k) * y[j];
        return s;
    }

    static Specialization random(Rng& rng, std::size_t n, long box, bool with_x, bool with_y) {
        IntMat a1(n, n), a2(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a1(i, j) = Int(rng.uniform(-box, box));
                a2(i, j) = Int(rng.uniform(-box, box));
            }
        Specialization s(Tensor(std::move(a1), std::move(a2)));
        if (with_x) {
            s.x = {Int(rng.uniform(-box, box)), Int(rng.uniform(-box, box))};
        }
        if (with_y) {
            s.y.resize(n);
            for (auto& v : s.y) v = Int(rng.uniform(-box, box));
        }
        return s;
    }
};

/// Denominator-free action matrices: c0*(-C1^-1*C2)^k + ... + c(k-1)*(-C1^-1*C2) has
/// integer entries for every k in range, evaluated in exact rationals.
/// Requires det C1 != 0 at the specialization.
inline bool check_nodenom(const Specialization& s, std::size_t k_max) {
    if (det(s.tensor.a1) == 0) throw error("singular first slice; resample");
    for (std::size_t k = 1; k <= k_max; ++k) {
        // zeta_action_matrix already asserts integrality; a violation throws
        try {
            zeta_action_matrix(s.tensor, k, Side::column);
        } catch (const error&) {
            return false;
        }
    }
    return true;
}

/// Correspondence identity, y-side: with x1 = -C(y)_{2,l}, x2 = C(y)_{1,l},
/// the contraction C(x,y)_k equals -C(y)_{1,k} C(y)_{2,l} + C(y)_{2,k} C(y)_{1,l}
/// for every k.  A polynomial identity: true for all specializations.
inline bool check_correspondence_forward(const Specialization& s, std::size_t l) {
    if (s.y.size() != s.n()) throw error("specialization needs a y vector");
    const std::size_t n = s.n();
    Int x1 = -s.cy(2, l);
    Int x2 = s.cy(1, l);
    for (std::size_t k = 0; k < n; ++k) {
        Int lhs(0);
        for (std::size_t j = 0; j < n; ++j)
            lhs += (s.u(1, j, k) * x1 + s.u(2, j, k) * x2) * s.y[j];
        Int rhs = -s.cy(1, k) * s.cy(2, l) + s.cy(2, k) * s.cy(1, l);
        if (lhs != rhs) return false;
    }
    return true;
}

/// Correspondence identity, x-side: defining y_j as the (j,k) signed cofactor
/// of C(x) and x' from y by the forward formulas with column l,
///   -x1'*x2 + x2'*x1 = det(C(x) with column k replaced by column l),
/// which is det C(x) itself when k = l and 0 otherwise (repeated column).
inline bool check_correspondence_backward(const Specialization& s, std::size_t k,
                                          std::size_t l) {
    if (s.x.size() != 2) throw error("specialization needs an x vector");
    const std::size_t n = s.n();
    IntMat cx(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < n; ++c)
            cx(j, c) = s.u(1, j, c) * s.x[0] + s.u(2, j, c) * s.x[1];

    // signed maximal minors down column k
    std::vector<Int> y(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntMat minor(n - 1, n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
            if (r == j) continue;
            for (std::size_t c = 0, mc = 0; c < n; ++c) {
                if (c == k) continue;
                minor(mr, mc++) = cx(r, c);
            }
            ++mr;
        }
        y[j] = det(minor);
        if ((j + k) % 2 == 1) y[j] = -y[j];
    }

    Int x1p(0), x2p(0);
    for (std::size_t j = 0; j < n; ++j) {
        x1p -= s.u(2, j, l) * y[j];
        x2p += s.u(1, j, l) * y[j];
    }
    Int lhs = -x1p * s.x[1] + x2p * s.x[0];

    IntMat replaced = cx;
    for (std::size_t r = 0; r < n; ++r) replaced(r, k) = cx(r, l);
    return lhs == det(replaced);
}

}  // namespace binform
