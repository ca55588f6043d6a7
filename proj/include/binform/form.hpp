#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "binform/poly.hpp"

namespace binform {

/// Integral binary n-ic form f0*x^n + f1*x^(n-1)*y + ... + fn*y^n, n >= 2.
class BinaryForm {
public:
    explicit BinaryForm(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
        bool all_zero = true;
        for (const Int& v : c_) all_zero = all_zero && v == 0;
        if (all_zero) throw error("zero form");
        if (c_.size() < 3) throw error("binary form needs degree >= 2");
    }

    std::size_t degree() const { return c_.size() - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(std::size_t i) const { return c_[i]; }
    const Int& leading() const { return c_[0]; }
    const Int& trailing() const { return c_.back(); }

    bool operator==(const BinaryForm& o) const { return c_ == o.c_; }
    bool operator!=(const BinaryForm& o) const { return c_ != o.c_; }

    /// F(x, 1) as a univariate polynomial (degree < n when f0 = 0).
    IntPoly dehomogenized() const {
        std::vector<Int> p(c_.rbegin(), c_.rend());
        return IntPoly(std::move(p));
    }

    Int eval(const Int& x, const Int& y) const {
        Int acc(0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            Int term = c_[i];
            for (std::size_t k = 0; k < degree() - i; ++k) term *= x;
            for (std::size_t k = 0; k < i; ++k) term *= y;
            acc += term;
        }
        return acc;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + to_string(c_[i]);
        return s + ")";
    }

private:
    std::vector<Int> c_;
};

/// Element of GL2(Z): (a b; c d) with ad - bc = ±1.
struct GL2 {
    Int a, b, c, d;

    GL2(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        Int dt = det();
        if (dt != 1 && dt != -1) throw error("GL2 element must have determinant ±1");
    }

    static GL2 identity() { return GL2(1, 0, 0, 1); }
    static GL2 shear(const Int& t) { return GL2(1, t, 0, 1); }  // (x,y) -> (x, y+tx)

    Int det() const { return a * d - b * c; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    GL2 inverse() const {
        Int dt = det();  // ±1
        return GL2(d * dt, -b * dt, -c * dt, a * dt);
    }
    GL2 operator*(const GL2& o) const {
        return GL2(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
    }
    bool operator==(const GL2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

/// g(f) = F(a*x + c*y, b*x + d*y), exact coefficient expansion.
inline BinaryForm gl2_act_form(const GL2& g, const BinaryForm& f) {
    const std::size_t n = f.degree();
    // powers of (a*x + c*y) and (b*x + d*y) as homogeneous coefficient vectors
    auto hom_pow = [](const Int& u, const Int& v, std::size_t k) {
        std::vector<Int> p{Int(1)};
        for (std::size_t s = 0; s < k; ++s) {
            std::vector<Int> q(p.size() + 1, Int(0));
            for (std::size_t i = 0; i < p.size(); ++i) {
                q[i] += u * p[i];
                q[i + 1] += v * p[i];
            }
            p = std::move(q);
        }
        return p;
    };
    std::vector<Int> out(n + 1, Int(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (f.coeff(i) == 0) continue;
        std::vector<Int> first = hom_pow(g.a, g.c, n - i);
        std::vector<Int> second = hom_pow(g.b, g.d, i);
        for (std::size_t p = 0; p < first.size(); ++p)
            for (std::size_t q = 0; q < second.size(); ++q)
                out[p + q] += f.coeff(i) * first[p] * second[q];
    }
    return BinaryForm(std::move(out));
}

/// Moves a nonzero form to one with nonzero leading coefficient.  Returns the
/// applied GL2 element g and f' = g(f).  When f0 != 0 already, g = identity;
/// otherwise g is the shear (x,y) -> (x, y+tx) with the smallest |t| >= 1
/// (ties broken toward positive t) such that F(1,t) != 0.
inline std::pair<GL2, BinaryForm> normalize_leading(const BinaryForm& f) {
    if (f.leading() != 0) return {GL2::identity(), f};
    for (Int mag(1);; ++mag) {
        for (Int t : {Int(mag), Int(-mag)}) {
            if (f.eval(1, t) == 0) continue;
            GL2 g = GL2::shear(t);
            return {g, gl2_act_form(g, f)};
        }
    }
}

struct FormStats {
    Int disc;
    bool primitive;
};

/// Discriminant convention: disc(f) = (-1)^(n(n-1)/2) * Res(F, F') / f0 with
/// F = F(x,1), which matches f1^2 - 4*f0*f2 at n = 2.  Forms with f0 = 0 are
/// first moved by the canonical shear; the discriminant is invariant under it.
inline FormStats form_stats(const BinaryForm& f) {
    BinaryForm g = f.leading() != 0 ? f : normalize_leading(f).second;
    const std::size_t n = g.degree();
    IntPoly p = g.dehomogenized();
    Int res = resultant(p, n, p.derivative(), n - 1);
    Int disc = res / g.leading();  // exact: lc(p) divides Res(p, p')
    if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;

    Int gc(0);
    for (const Int& v : f.coeffs()) gc = gcd(gc, v);
    return FormStats{disc, gc == 1};
}

}  // namespace binform
