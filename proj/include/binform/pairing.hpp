#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "binform/ring.hpp"
#include "binform/tensor.hpp"

namespace binform {

enum class Side { row, column };

/// Rank-n module over R_f given by integer action matrices for each zeta_k,
/// k = 1..n-1.  Row-side elements are row vectors acted on the right;
/// column-side elements are column vectors acted on the left.
struct BasedModule {
    BinaryForm form;  // context with f0 != 0
    Side side;
    std::vector<IntMat> actions;  // actions[k-1] is the zeta_k matrix

    BasedModule(BinaryForm f, Side s, std::vector<IntMat> z)
        : form(std::move(f)), side(s), actions(std::move(z)) {
        if (actions.size() + 1 != form.degree())
            throw error("module needs one action matrix per zeta_k, k = 1..n-1");
    }

    std::size_t n() const { return form.degree(); }
    const IntMat& action(std::size_t k) const {  // k in 1..n-1
        return actions.at(k - 1);
    }

    /// Action of an arbitrary zeta-coordinate vector (a_0, ..., a_(n-1)).
    IntMat combined_action(const std::vector<Int>& zeta_coords) const {
        IntMat acc = IntMat::identity(n()) * zeta_coords[0];
        for (std::size_t k = 1; k < zeta_coords.size(); ++k)
            acc = acc + action(k) * zeta_coords[k];
        return acc;
    }

    /// Module axioms against the ring's structure constants:
    /// Z_i Z_j = sum_k c^k_{ij} Z_k + c^0_{ij} I, plus pairwise commuting.
    bool axioms_hold(const FormRing& ring) const {
        const std::size_t n = this->n();
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                IntMat lhs = action(i) * action(j);
                if (lhs != action(j) * action(i)) return false;
                IntMat rhs = IntMat::identity(n) * ring.struct_const(i, j, 0);
                for (std::size_t k = 1; k < n; ++k)
                    rhs = rhs + action(k) * ring.struct_const(i, j, k);
                if (lhs != rhs) return false;
            }
        return true;
    }

    bool operator==(const BasedModule& o) const {
        return form == o.form && side == o.side && actions == o.actions;
    }
};

/// Integer matrix by which zeta_k acts on the modules attached to a tensor:
///   column side: c0*(-A1^-1*A2)^k + c1*(-A1^-1*A2)^(k-1) + ... + c(k-1)*(-A1^-1*A2)
///   row side:    the same polynomial in -A2*A1^-1.
/// Computed in exact rationals; integrality of every entry is asserted.
inline IntMat zeta_action_matrix(const Tensor& a, std::size_t k, Side side) {
    if (det(a.a1) == 0) throw error("leading coefficient vanishes; apply GL2 transport");
    const std::size_t n = a.n();
    if (k < 1 || k >= n) throw error("zeta index out of range");
    std::vector<Int> c = det_form_coeffs(a);
    RatMat inv1 = inverse(a.a1);
    RatMat theta = side == Side::column ? -(inv1 * to_rat(a.a2)) : -(to_rat(a.a2) * inv1);
    RatMat acc(n, n);
    RatMat pw = theta;
    for (std::size_t i = k; i-- > 0;) {  // c_(k-1)*theta^1 + ... + c_0*theta^k
        acc = acc + pw * Rat(c[i]);
        pw = pw * theta;
    }
    if (!is_integral(acc)) throw error("zeta action matrix has a non-integral entry");
    return to_int(acc);
}

/// A based balanced pair: modules M (rows) and N (columns) with the pairing
/// into I_f and the derived tensor.  When the input tensor had det(A1) = 0,
/// all ring data lives in the context of the sheared form (transport != id)
/// and `tensor` stores the original, untransported slices.
struct BalancedPair {
    BinaryForm form;        // Det of the original tensor
    GL2 transport;          // shear moving form to ctx form (identity if f0 != 0)
    BinaryForm ctx_form;    // transport(form); has nonzero leading coefficient
    BasedModule m, n_mod;
    std::vector<std::vector<ThetaVec>> pairing;  // pairing[j][k] = m_j ∘ n_k, in I_(ctx_form)
    Tensor tensor;          // original tensor

    std::size_t n() const { return form.degree(); }
};

/// Pairing elements m_j ∘ n_k reconstructed from the values of
/// zeta_dual_top(zeta_i * x): the defining linear system is triangular in the
/// power basis, giving
///   coords[n-1]   = f0 * A1[j,k]
///   coords[n-1-i] = (Z_i^row * A1)[j,k] + f_i * A1[j,k]   for i = 1..n-1.
inline std::vector<std::vector<ThetaVec>> reconstruct_pairing(const BinaryForm& f,
                                                              const BasedModule& row_mod,
                                                              const IntMat& a1) {
    const std::size_t n = f.degree();
    std::vector<IntMat> b;  // b[i-1] = Z_i^row * A1
    for (std::size_t i = 1; i < n; ++i) b.push_back(row_mod.action(i) * a1);
    std::vector<std::vector<ThetaVec>> pairing;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<ThetaVec> row;
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Rat> coords(n, Rat(0));
            coords[n - 1] = Rat(f.leading() * a1(j, k));
            for (std::size_t i = 1; i < n; ++i)
                coords[n - 1 - i] = Rat(b[i - 1](j, k) + f.coeff(i) * a1(j, k));
            row.emplace_back(f, std::move(coords));
        }
        pairing.push_back(std::move(row));
    }
    return pairing;
}

namespace detail {

inline void verify_pair_invariants(const BalancedPair& p, const RingContext& ctx,
                                   const Tensor& normalized) {
    const std::size_t n = p.n();
    if (!p.m.axioms_hold(ctx.ring) || !p.n_mod.axioms_hold(ctx.ring))
        throw error("module axioms violated");
    // pairing values map to the tensor entries under I_f -> V, lie in I_f,
    // and the pairing is R_f-bilinear
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const ThetaVec& x = p.pairing[j][k];
            auto [v1, v2] = to_V(x);
            if (v1 != Rat(normalized.a1(j, k)) || v2 != Rat(normalized.a2(j, k)))
                throw error("pairing does not project to the tensor entries");
            if (!ctx.If.contains(x)) throw error("pairing element escapes I_f");
        }
    for (std::size_t k = 1; k < n; ++k) {
        IntMat left = p.m.action(k) * normalized.a1;
        IntMat right = normalized.a1 * p.n_mod.action(k);
        if (left != right) throw error("pairing is not R_f-bilinear");
    }
}

}  // namespace detail

/// The tensor -> based balanced pair construction.  Total on tensors whose
/// determinant form is nonzero: when det(A1) = 0 the canonical shear from
/// normalize_leading is applied first and recorded in the result.
inline BalancedPair psi(const Tensor& a) {
    BinaryForm f = det_binary_form(a);  // throws on the zero form
    auto [g, fp] = normalize_leading(f);
    Tensor an = g.is_identity() ? a : gl2_act_tensor(g, a);

    RingContext ctx(fp);
    const std::size_t n = a.n();
    std::vector<IntMat> zm, zn;
    for (std::size_t k = 1; k < n; ++k) {
        zm.push_back(zeta_action_matrix(an, k, Side::row));
        zn.push_back(zeta_action_matrix(an, k, Side::column));
    }
    BasedModule m(fp, Side::row, std::move(zm));
    BasedModule nn(fp, Side::column, std::move(zn));
    std::vector<std::vector<ThetaVec>> pairing = reconstruct_pairing(fp, m, an.a1);

    BalancedPair p{f, g, fp, std::move(m), std::move(nn), std::move(pairing), a};
    detail::verify_pair_invariants(p, ctx, an);
    return p;
}

/// The based balanced pair -> tensor construction:
/// A1[j,k] = zeta_dual_top(pairing[j][k]), A2[j,k] = -zeta_dual_second(...),
/// transported back through the recorded shear.
inline Tensor phi(const BalancedPair& p) {
    const std::size_t n = p.n();
    IntMat a1(n, n), a2(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            auto [v1, v2] = to_V(p.pairing[j][k]);
            if (!is_integer(v1) || !is_integer(v2))
                throw error("pairing does not land in I_f");
            a1(j, k) = v1.get_num();
            a2(j, k) = v2.get_num();
        }
    Tensor t(std::move(a1), std::move(a2));
    if (p.transport.is_identity()) return t;
    return gl2_act_tensor(p.transport.inverse(), t);
}

struct SymmetricReport {
    bool is_symmetric;
    std::optional<BalancedPair> self_pair;  // set only when symmetric
};

/// Symmetric tensors correspond to self-balanced modules: when A1, A2 are
/// both symmetric, psi produces mirror modules with Z_k(M) = Z_k(N)^T, which
/// is asserted here.
inline SymmetricReport symmetric_ops(const Tensor& a) {
    if (!a.is_symmetric()) return {false, std::nullopt};
    BalancedPair pair = psi(a);
    for (std::size_t k = 1; k < a.n(); ++k)
        if (pair.m.action(k) != pair.n_mod.action(k).transpose())
            throw error("symmetric tensor did not yield mirror action matrices");
    return {true, std::move(pair)};
}

}  // namespace binform
