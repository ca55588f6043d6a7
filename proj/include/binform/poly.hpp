#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "binform/matrix.hpp"

namespace binform {

/// Polynomial with exact coefficients, lowest degree first.  Normalized so the
/// leading coefficient is nonzero unless the polynomial is zero.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly monomial(std::size_t deg, const T& lead = T(1)) {
        std::vector<T> c(deg + 1, T(0));
        c[deg] = lead;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const T& s) const {
        std::vector<T> r = c_;
        for (T& v : r) v *= s;
        return Poly(std::move(r));
    }

    T eval(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T((long)i);
        return Poly(std::move(r));
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (!s.empty()) s += " + ";
            s += to_string(c_[i]) + "*t^" + std::to_string(i);
        }
        return s;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.coeffs()[i]);
    return RatPoly(std::move(c));
}

inline bool is_integral(const RatPoly& p) {
    for (const Rat& c : p.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

inline IntPoly to_int(const RatPoly& p) {
    std::vector<Int> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_int(p.coeffs()[i]);
    return IntPoly(std::move(c));
}

/// Unique polynomial of degree < points.size() through (x_i, y_i), exact.
inline RatPoly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw error("interpolation point count mismatch");
    RatPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly term(std::vector<Rat>{ys[i]});
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            Rat inv_d = Rat(1) / (xs[i] - xs[j]);
            term = term * RatPoly(std::vector<Rat>{-xs[j] * inv_d, inv_d});
        }
        acc = acc + term;
    }
    return acc;
}

/// Monic characteristic polynomial det(tI - m), exact, by evaluation at
/// t = 0..n and Lagrange interpolation.
inline RatPoly charpoly(const RatMat& m) {
    if (!m.is_square()) throw error("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    auto [z, d] = clear_denominators(m);  // m = z/d
    std::vector<Rat> xs(n + 1), ys(n + 1);
    Rat dn(1);
    for (std::size_t i = 0; i < n; ++i) dn *= Rat(d);
    for (std::size_t t = 0; t <= n; ++t) {
        IntMat shifted = z;  // t*d*I - z, then det/d^n
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) shifted(i, j) = -z(i, j);
            shifted(i, i) += Int((long)t) * d;
        }
        xs[t] = Rat((long)t);
        ys[t] = Rat(det(shifted)) / dn;
    }
    return lagrange_interpolate(xs, ys);
}

inline IntPoly charpoly(const IntMat& m) {
    RatPoly p = charpoly(to_rat(m));
    return to_int(p);  // integer matrix has integer characteristic polynomial
}

/// Companion matrix of a monic polynomial: multiplication-by-t on the power
/// basis of Q[t]/(p), so charpoly(companion(p)) == p.
inline IntMat companion(const IntPoly& p) {
    if (p.leading() != 1) throw error("companion matrix needs a monic polynomial");
    const std::size_t n = p.degree();
    IntMat c(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
    return c;
}

/// Resultant via the Sylvester matrix built with formal degrees da, db.
inline Int resultant(const IntPoly& a, std::size_t da, const IntPoly& b, std::size_t db) {
    if (da + db == 0) return Int(1);
    IntMat s(da + db, da + db);
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t i = 0; i <= da; ++i) s(r, r + i) = a.coeff(da - i);
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t i = 0; i <= db; ++i) s(db + r, r + i) = b.coeff(db - i);
    return det(s);
}

}  // namespace binform
