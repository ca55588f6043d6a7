#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "binform/form.hpp"
#include "binform/matrix.hpp"
#include "binform/poly.hpp"

namespace binform {

/// Element of Z^2 ⊗ Z^n ⊗ Z^n as a pair of n x n integer matrices.
struct Tensor {
    IntMat a1, a2;

    Tensor(IntMat m1, IntMat m2) : a1(std::move(m1)), a2(std::move(m2)) {
        if (!a1.is_square() || a1.rows() != a2.rows() || !a2.is_square())
            throw error("tensor slices must be square of equal size");
        if (a1.rows() < 2) throw error("tensor size must be at least 2");
    }

    std::size_t n() const { return a1.rows(); }
    bool operator==(const Tensor& o) const { return a1 == o.a1 && a2 == o.a2; }
    bool operator!=(const Tensor& o) const { return !(*this == o); }
    bool is_symmetric() const { return a1.is_symmetric() && a2.is_symmetric(); }
};

/// Coefficients (c0, ..., cn) of Det(A1*x + A2*y), all-zero allowed.
/// Computed exactly by evaluating det(A1*t + A2) at t = 0..n and
/// Lagrange-interpolating; c0 = det(A1) and cn = det(A2) are asserted.
inline std::vector<Int> det_form_coeffs(const Tensor& a) {
    const std::size_t n = a.n();
    std::vector<Rat> xs(n + 1), ys(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        IntMat pencil = a.a2;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) pencil(i, j) += Int((long)t) * a.a1(i, j);
        xs[t] = Rat((long)t);
        ys[t] = Rat(det(pencil));
    }
    RatPoly p = lagrange_interpolate(xs, ys);
    std::vector<Int> c(n + 1, Int(0));
    for (std::size_t i = 0; i <= n; ++i) c[i] = to_int(p.coeff(n - i));
    if (c[0] != det(a.a1) || c[n] != det(a.a2))
        throw error("determinant form endpoints disagree with direct determinants");
    return c;
}

inline bool has_zero_det_form(const Tensor& a) {
    for (const Int& c : det_form_coeffs(a))
        if (c != 0) return false;
    return true;
}

/// The binary n-ic form Det(A1*x + A2*y); throws on the zero form.
inline BinaryForm det_binary_form(const Tensor& a) {
    std::vector<Int> c = det_form_coeffs(a);
    bool all_zero = true;
    for (const Int& v : c) all_zero = all_zero && v == 0;
    if (all_zero) throw error("degenerate tensor: zero determinant form");
    return BinaryForm(std::move(c));
}

/// Companion tensor (I, -Comp(F)) of a monic form: Det = F exactly.
inline Tensor companion_tensor(const BinaryForm& f) {
    if (f.leading() != 1) throw error("companion tensor needs a monic form");
    IntMat c = companion(f.dehomogenized());
    return Tensor(IntMat::identity(f.degree()), -c);
}

/// GL2(Z) action on the V slot: g(A) = (a*A1 + b*A2, c*A1 + d*A2), the unique
/// linear action making Det equivariant with the form action; the
/// equivariance Det(g(A)) = g(Det(A)) is asserted on every call.
inline Tensor gl2_act_tensor(const GL2& g, const Tensor& a) {
    Tensor out(a.a1 * g.a + a.a2 * g.b, a.a1 * g.c + a.a2 * g.d);
    std::vector<Int> lhs = det_form_coeffs(out);
    std::vector<Int> rhs = det_form_coeffs(a);
    // transform rhs through the form action unless it is the zero form
    bool zero = true;
    for (const Int& v : rhs) zero = zero && v == 0;
    if (!zero) rhs = gl2_act_form(g, BinaryForm(rhs)).coeffs();
    if (lhs != rhs) throw error("tensor action broke determinant equivariance");
    return out;
}

}  // namespace binform
