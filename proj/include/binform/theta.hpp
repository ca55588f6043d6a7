#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "binform/form.hpp"
#include "binform/matrix.hpp"

namespace binform {

/// Element of Q[theta]/F(theta,1) for a form context with f0 != 0, stored as
/// rational coordinates on the power basis 1, theta, ..., theta^(n-1).
class ThetaVec {
public:
    ThetaVec(BinaryForm form, std::vector<Rat> coords)
        : form_(std::move(form)), coords_(std::move(coords)) {
        if (form_.leading() == 0) throw error("theta arithmetic needs f0 != 0");
        if (coords_.size() != form_.degree()) throw error("coordinate count must equal degree");
    }

    static ThetaVec zero(const BinaryForm& f) {
        return ThetaVec(f, std::vector<Rat>(f.degree(), Rat(0)));
    }
    static ThetaVec one(const BinaryForm& f) {
        std::vector<Rat> c(f.degree(), Rat(0));
        c[0] = 1;
        return ThetaVec(f, std::move(c));
    }
    static ThetaVec theta_pow(const BinaryForm& f, std::size_t k) {
        std::vector<Rat> raw(k + 1, Rat(0));
        raw[k] = 1;
        return ThetaVec(f, reduce(f, std::move(raw)));
    }
    /// zeta_0 = 1, zeta_k = f0*theta^k + f1*theta^(k-1) + ... + f(k-1)*theta.
    static ThetaVec zeta(const BinaryForm& f, std::size_t k) {
        if (k == 0) return one(f);
        if (k >= f.degree()) throw error("zeta index out of range");
        std::vector<Rat> c(f.degree(), Rat(0));
        for (std::size_t i = 0; i < k; ++i) c[k - i] = Rat(f.coeff(i));
        return ThetaVec(f, std::move(c));
    }

    const BinaryForm& form() const { return form_; }
    std::size_t n() const { return form_.degree(); }
    const std::vector<Rat>& coords() const { return coords_; }
    const Rat& coord(std::size_t i) const { return coords_[i]; }

    bool is_zero() const {
        for (const Rat& c : coords_)
            if (c != 0) return false;
        return true;
    }
    bool is_integral() const {
        for (const Rat& c : coords_)
            if (!is_integer(c)) return false;
        return true;
    }

    bool operator==(const ThetaVec& o) const {
        return form_ == o.form_ && coords_ == o.coords_;
    }
    bool operator!=(const ThetaVec& o) const { return !(*this == o); }

    ThetaVec operator+(const ThetaVec& o) const {
        require_context(o);
        std::vector<Rat> c(coords_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
        return ThetaVec(form_, std::move(c));
    }
    ThetaVec operator-(const ThetaVec& o) const {
        require_context(o);
        std::vector<Rat> c(coords_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
        return ThetaVec(form_, std::move(c));
    }
    ThetaVec operator*(const Rat& s) const {
        std::vector<Rat> c(coords_);
        for (Rat& v : c) v *= s;
        return ThetaVec(form_, std::move(c));
    }
    ThetaVec operator*(const ThetaVec& o) const {
        require_context(o);
        const std::size_t n = coords_.size();
        std::vector<Rat> raw(2 * n - 1, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (coords_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) raw[i + j] += coords_[i] * o.coords_[j];
        }
        return ThetaVec(form_, reduce(form_, std::move(raw)));
    }

    /// Multiplication-by-this matrix on the power basis (columns = this * theta^k).
    RatMat mult_matrix() const {
        const std::size_t n = coords_.size();
        RatMat m(n, n);
        ThetaVec acc = *this;
        ThetaVec th = theta_pow(form_, 1);
        for (std::size_t k = 0; k < n; ++k) {
            m.set_col(k, acc.coords_);
            if (k + 1 < n) acc = acc * th;
        }
        return m;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coords_.size(); ++i)
            s += (i ? "," : "") + to_string(coords_[i]);
        return s + "]";
    }

private:
    /// Reduce a raw power-basis coefficient vector modulo F(theta,1) using
    /// theta^n = -(f1*theta^(n-1) + ... + fn)/f0.
    static std::vector<Rat> reduce(const BinaryForm& f, std::vector<Rat> raw) {
        const std::size_t n = f.degree();
        Rat inv_f0 = Rat(1) / Rat(f.leading());
        for (std::size_t m = raw.size(); m-- > n;) {
            if (raw[m] == 0) continue;
            Rat c = raw[m] * inv_f0;
            for (std::size_t j = 1; j <= n; ++j) raw[m - j] -= c * Rat(f.coeff(j));
            raw[m] = 0;
        }
        raw.resize(n);
        return raw;
    }

    void require_context(const ThetaVec& o) const {
        if (form_ != o.form_) throw error("mixing elements of different form contexts");
    }

    BinaryForm form_;
    std::vector<Rat> coords_;
};

/// Dual functional extracting the top zeta-coefficient:
/// zeta_dual_top(r) = theta_dual_(n-1)(r) / f0.
inline Rat zeta_dual_top(const ThetaVec& r) {
    const std::size_t n = r.n();
    return r.coord(n - 1) / Rat(r.form().leading());
}

/// Second functional: (theta_dual_(n-2)(r) - f1*theta_dual_(n-1)(r)/f0) / f0.
/// Used verbatim for every n >= 2.
inline Rat zeta_dual_second(const ThetaVec& r) {
    const std::size_t n = r.n();
    Rat f0(r.form().leading());
    return (r.coord(n - 2) - Rat(r.form().coeff(1)) * r.coord(n - 1) / f0) / f0;
}

/// Dispatcher keyed by the functional index, which must be n-1 or n-2.
inline Rat zeta_dual(const ThetaVec& r, std::size_t which) {
    const std::size_t n = r.n();
    if (which == n - 1) return zeta_dual_top(r);
    if (which == n - 2) return zeta_dual_second(r);
    throw error("only the two top dual functionals are exposed");
}

/// Map into V = Z^2: r -> (zeta_dual_top(r), -zeta_dual_second(r)); integral
/// exactly on elements of I_f.
inline std::pair<Rat, Rat> to_V(const ThetaVec& r) {
    return {zeta_dual_top(r), -zeta_dual_second(r)};
}

/// Exact check of the coefficient-extraction identity
/// zeta_dual_top(zeta_k * r) = theta_dual_(n-1-k)(r) - f_k * zeta_dual_top(r)
/// for 1 <= k <= n-1.  Holds for every r; used as a test oracle.
inline bool getcoeff_identity(const BinaryForm& f, const ThetaVec& r, std::size_t k) {
    const std::size_t n = f.degree();
    if (k < 1 || k > n - 1) throw error("k out of range");
    Rat lhs = zeta_dual_top(ThetaVec::zeta(f, k) * r);
    Rat rhs = r.coord(n - 1 - k) - Rat(f.coeff(k)) * zeta_dual_top(r);
    return lhs == rhs;
}

}  // namespace binform
