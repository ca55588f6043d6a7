#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "binform/hnf.hpp"
#include "binform/theta.hpp"

namespace binform {

/// Full-rank lattice in Q[theta]/F, columns of `basis` = generators in
/// power-basis coordinates.  Always stored HNF-canonical, so equality of
/// lattices is equality of matrices.
class Lattice {
public:
    Lattice(BinaryForm form, const RatMat& basis)
        : form_(std::move(form)), basis_(hnf(basis)) {
        if (basis_.rows() != form_.degree()) throw error("lattice rank must equal degree");
    }

    static Lattice spanned_by(const BinaryForm& form, const std::vector<ThetaVec>& gens) {
        if (gens.empty()) throw error("degenerate lattice");
        RatMat m(form.degree(), gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) m.set_col(j, gens[j].coords());
        return Lattice(form, hnf_span(m));
    }

    const BinaryForm& form() const { return form_; }
    const RatMat& basis() const { return basis_; }
    std::size_t n() const { return form_.degree(); }

    ThetaVec basis_element(std::size_t j) const { return ThetaVec(form_, basis_.col(j)); }
    std::vector<ThetaVec> basis_elements() const {
        std::vector<ThetaVec> v;
        for (std::size_t j = 0; j < n(); ++j) v.push_back(basis_element(j));
        return v;
    }

    bool contains(const ThetaVec& r) const {
        if (r.form() != form_) throw error("membership test across contexts");
        std::vector<Rat> x = solve(basis_, r.coords());
        for (const Rat& v : x)
            if (!is_integer(v)) return false;
        return true;
    }

    bool contains(const Lattice& other) const {
        for (std::size_t j = 0; j < n(); ++j)
            if (!contains(other.basis_element(j))) return false;
        return true;
    }

    Lattice scaled(const Rat& s) const {
        if (s == 0) throw error("degenerate lattice");
        return Lattice(form_, basis_ * s);
    }

    bool operator==(const Lattice& o) const { return form_ == o.form_ && basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

private:
    BinaryForm form_;
    RatMat basis_;
};

/// The rank-n ring attached to a form with f0 != 0: zeta-basis elements,
/// integer structure constants, and the change of basis to theta powers.
class FormRing {
public:
    explicit FormRing(BinaryForm form) : form_(std::move(form)) {
        if (form_.leading() == 0) throw error("ring construction needs f0 != 0");
        const std::size_t n = form_.degree();
        for (std::size_t k = 0; k < n; ++k) zetas_.push_back(ThetaVec::zeta(form_, k));

        basis_change_ = RatMat(n, n);
        for (std::size_t k = 0; k < n; ++k) basis_change_.set_col(k, zetas_[k].coords());

        // structure constants: reg_[i] column j = zeta coordinates of zeta_i*zeta_j
        for (std::size_t i = 0; i < n; ++i) {
            IntMat ri(n, n);
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Rat> zc = to_zeta_coords(zetas_[i] * zetas_[j]);
                for (std::size_t k = 0; k < n; ++k) {
                    if (!is_integer(zc[k]))
                        throw error("non-integral structure constant for form " + form_.str());
                    ri(k, j) = zc[k].get_num();
                }
            }
            reg_.push_back(std::move(ri));
        }
    }

    const BinaryForm& form() const { return form_; }
    std::size_t n() const { return form_.degree(); }
    const ThetaVec& zeta(std::size_t k) const { return zetas_[k]; }

    /// Matrix of multiplication by zeta_i on the zeta-basis; entry (k, j) is
    /// the structure constant c^k_{ij}.
    const IntMat& regular_rep(std::size_t i) const { return reg_[i]; }

    Int struct_const(std::size_t i, std::size_t j, std::size_t k) const {
        return reg_[i](k, j);
    }

    /// Coordinates of r on the zeta-basis (rational in general).
    std::vector<Rat> to_zeta_coords(const ThetaVec& r) const {
        return solve(basis_change_, r.coords());
    }

    /// Lattice of R_f itself (span of the zeta-basis).
    Lattice lattice() const { return Lattice(form_, basis_change_); }

    /// Commutativity and associativity of the structure-constant table:
    /// c_{ij} = c_{ji} and sum_m c^m_{ij} c^l_{mk} = sum_m c^m_{jk} c^l_{im}.
    bool axioms_hold() const {
        const std::size_t n = this->n();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (struct_const(i, j, k) != struct_const(j, i, k)) return false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (reg_[i] * reg_[j] != reg_mul(i, j)) return false;
            }
        return true;
    }

private:
    // regular rep of zeta_i*zeta_j expanded through the structure constants
    IntMat reg_mul(std::size_t i, std::size_t j) const {
        const std::size_t n = this->n();
        IntMat acc(n, n);
        for (std::size_t m = 0; m < n; ++m) {
            Int c = struct_const(i, j, m);
            if (c == 0) continue;
            acc = acc + reg_[m] * c;
        }
        return acc;
    }

    BinaryForm form_;
    std::vector<ThetaVec> zetas_;
    RatMat basis_change_;
    std::vector<IntMat> reg_;
};

inline FormRing make_ring(const BinaryForm& f) { return FormRing(f); }

/// The distinguished module lattices attached to f (f0 != 0):
///   I_f = <1, theta, ..., theta^(n-3), f0*theta^(n-2), f0*theta^(n-1)+f1*theta^(n-2)>
///   J_f = <1, theta, ..., theta^(n-2), zeta_(n-1)>
/// For n = 2 the I_f list degenerates to {f0, f0*theta + f1}.
inline std::pair<Lattice, Lattice> make_If_Jf(const BinaryForm& f) {
    if (f.leading() == 0) throw error("module construction needs f0 != 0");
    const std::size_t n = f.degree();
    std::vector<ThetaVec> gi, gj;
    for (std::size_t j = 0; j + 2 < n; ++j) gi.push_back(ThetaVec::theta_pow(f, j));
    gi.push_back(ThetaVec::theta_pow(f, n - 2) * Rat(f.leading()));
    gi.push_back(ThetaVec::theta_pow(f, n - 1) * Rat(f.leading()) +
                 ThetaVec::theta_pow(f, n - 2) * Rat(f.coeff(1)));
    for (std::size_t j = 0; j + 1 < n; ++j) gj.push_back(ThetaVec::theta_pow(f, j));
    gj.push_back(ThetaVec::zeta(f, n - 1));
    return {Lattice::spanned_by(f, gi), Lattice::spanned_by(f, gj)};
}

/// Norm |L| = generalized index [R_f : L] as a positive rational.
inline Rat ideal_norm(const FormRing& ring, const Lattice& l) {
    return lattice_index(l.basis(), ring.lattice().basis());
}

/// Everything attached to one form with f0 != 0, built once and shared.
struct RingContext {
    BinaryForm f;
    FormRing ring;
    Lattice rf, If, Jf;
    FormStats stats;

    explicit RingContext(const BinaryForm& form) : RingContext(form, make_If_Jf(form)) {}

private:
    RingContext(const BinaryForm& form, std::pair<Lattice, Lattice> ij)
        : f(form),
          ring(form),
          rf(ring.lattice()),
          If(std::move(ij.first)),
          Jf(std::move(ij.second)),
          stats(form_stats(form)) {}
};

}  // namespace binform
