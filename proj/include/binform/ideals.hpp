#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "binform/pairing.hpp"
#include "binform/ring.hpp"
#include "binform/rng.hpp"

namespace binform {

/// Full-rank lattice closed under multiplication by every zeta_k, i.e. a
/// fractional ideal of R_f sitting in Q[theta]/F.
class FractionalIdeal {
public:
    explicit FractionalIdeal(Lattice l) : lattice_(std::move(l)) {
        const BinaryForm& f = lattice_.form();
        for (std::size_t k = 1; k < lattice_.n(); ++k) {
            ThetaVec zk = ThetaVec::zeta(f, k);
            for (std::size_t j = 0; j < lattice_.n(); ++j)
                if (!lattice_.contains(zk * lattice_.basis_element(j)))
                    throw error("lattice is not closed under the ring action");
        }
    }

    const Lattice& lattice() const { return lattice_; }
    const BinaryForm& form() const { return lattice_.form(); }
    const RatMat& basis() const { return lattice_.basis(); }
    std::size_t n() const { return lattice_.n(); }

    bool operator==(const FractionalIdeal& o) const { return lattice_ == o.lattice_; }
    bool operator!=(const FractionalIdeal& o) const { return !(*this == o); }

private:
    Lattice lattice_;
};

/// Exact division in Q[theta]/F; throws when the divisor is a zero divisor.
inline ThetaVec theta_divide(const ThetaVec& num, const ThetaVec& den) {
    RatMat m = den.mult_matrix();
    if (det(m) == 0) throw error("division by a zero divisor");
    return ThetaVec(num.form(), solve(m, num.coords()));
}

/// True iff every ring element acts on the module with the same
/// characteristic polynomial as in the regular representation; checked on the
/// zeta-basis and on `trials` random integer combinations (coefficients in
/// [-3,3]), which guard against agreement on basis elements only.
inline bool is_characteristic(const BasedModule& m, const FormRing& ring, unsigned trials,
                              Rng& rng) {
    const std::size_t n = m.n();
    for (std::size_t k = 1; k < n; ++k)
        if (charpoly(m.action(k)) != charpoly(ring.regular_rep(k))) return false;
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<Int> a(n);
        for (auto& v : a) v = Int(rng.uniform(-3, 3));
        IntMat mod_side = m.combined_action(a);
        IntMat reg_side(n, n);
        for (std::size_t k = 0; k < n; ++k)
            reg_side = reg_side + ring.regular_rep(k) * a[k];
        if (charpoly(mod_side) != charpoly(reg_side)) return false;
    }
    return true;
}

namespace detail {

inline RatMat column_action(const BasedModule& m, std::size_t k) {
    return m.side == Side::column ? to_rat(m.action(k)) : to_rat(m.action(k).transpose());
}

/// Embedding of a characteristic module into Q[theta]/F: column j holds the
/// theta-coordinates of the image of the j-th module basis vector.  The
/// cyclic vector is searched among standard basis vectors, then small
/// integer vectors (a cyclic vector exists whenever charpoly is separable).
inline RatMat module_embedding(const BasedModule& m) {
    const std::size_t n = m.n();
    RatMat theta = column_action(m, 1) * make_rat(1, m.form.leading());
    auto try_vector = [&](const std::vector<Rat>& v) -> std::pair<bool, RatMat> {
        RatMat c(n, n);
        std::vector<Rat> w = v;
        for (std::size_t k = 0; k < n; ++k) {
            c.set_col(k, w);
            if (k + 1 < n) {
                std::vector<Rat> next(n, Rat(0));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) next[i] += theta(i, j) * w[j];
                w = std::move(next);
            }
        }
        if (det(c) == 0) return {false, c};
        return {true, inverse(c)};
    };
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> e(n, Rat(0));
        e[j] = 1;
        auto [ok, emb] = try_vector(e);
        if (ok) return emb;
    }
    std::vector<long> probe(n, -2);
    while (true) {
        std::vector<Rat> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Rat(probe[i]);
        auto [ok, emb] = try_vector(v);
        if (ok) return emb;
        std::size_t pos = 0;
        while (pos < n && probe[pos] == 2) probe[pos++] = -2;
        if (pos == n) throw error("cyclic vector search exhausted");
        ++probe[pos];
    }
}

}  // namespace detail

/// Realizes a characteristic module as a fractional ideal (unique up to
/// multiplication by an invertible element).  Needs a nondegenerate form.
inline FractionalIdeal realize_fractional_ideal(const BasedModule& m, const RingContext& ctx) {
    if (ctx.stats.disc == 0) throw error("degenerate form");
    const std::size_t n = m.n();
    for (std::size_t k = 1; k < n; ++k)
        if (charpoly(m.action(k)) != charpoly(ctx.ring.regular_rep(k)))
            throw error("non-characteristic module");
    RatMat emb = detail::module_embedding(m);
    return FractionalIdeal(Lattice(m.form, emb));
}

inline FractionalIdeal ideal_product(const FractionalIdeal& a, const FractionalIdeal& b) {
    if (a.form() != b.form()) throw error("ideal product across contexts");
    std::vector<ThetaVec> gens;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < b.n(); ++j)
            gens.push_back(a.lattice().basis_element(i) * b.lattice().basis_element(j));
    return FractionalIdeal(Lattice::spanned_by(a.form(), gens));
}

inline FractionalIdeal principal_ideal(const RingContext& ctx, const ThetaVec& k) {
    RatMat m = k.mult_matrix();
    if (det(m) == 0) throw error("principal ideal of a zero divisor");
    return FractionalIdeal(Lattice(ctx.f, m * ctx.rf.basis()));
}

/// (I : N) = {x : x*N ⊆ I}, computed as the integral preimage lattice of the
/// stacked maps B_I^-1 * Mult(b_j) over the basis elements b_j of N.
inline FractionalIdeal ideal_quotient(const FractionalIdeal& i, const FractionalIdeal& nn) {
    if (i.form() != nn.form()) throw error("ideal quotient across contexts");
    const std::size_t n = i.n();
    RatMat bi_inv = inverse(i.basis());
    RatMat stacked(n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatMat dj = bi_inv * nn.lattice().basis_element(j).mult_matrix();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(j * n + r, c) = dj(r, c);
    }
    return FractionalIdeal(Lattice(i.form(), integral_preimage_lattice(stacked)));
}

struct BalanceVerdict {
    bool contained;       // M*N ⊆ I_f
    bool norm_ok;         // |M|*|N| = |I_f|
    bool index_ok;        // [(J_f : N) : M] = [J_f : I_f]
    bool criteria_agree;  // (contained ∧ norm_ok) ⇔ (contained ∧ index_ok)
    Rat norm_m, norm_n, norm_if;

    bool balanced() const { return contained && norm_ok; }
};

/// Evaluates both balancing criteria (norm form and index form) for a pair of
/// fractional ideals; they provably agree for characteristic inputs.
inline BalanceVerdict check_balanced(const RingContext& ctx, const FractionalIdeal& m,
                                     const FractionalIdeal& n) {
    if (ctx.stats.disc == 0) throw error("degenerate form");
    BalanceVerdict v{};
    v.norm_m = ideal_norm(ctx.ring, m.lattice());
    v.norm_n = ideal_norm(ctx.ring, n.lattice());
    v.norm_if = ideal_norm(ctx.ring, ctx.If);
    v.contained = ctx.If.contains(ideal_product(m, n).lattice());
    v.norm_ok = v.norm_m * v.norm_n == v.norm_if;
    FractionalIdeal hom = ideal_quotient(FractionalIdeal(ctx.Jf), n);
    Rat lhs = lattice_index(m.basis(), hom.basis());
    Rat rhs = lattice_index(ctx.If.basis(), ctx.Jf.basis());
    v.index_ok = lhs == rhs;
    v.criteria_agree = (v.contained && v.norm_ok) == (v.contained && v.index_ok);
    return v;
}

struct PartnerResult {
    FractionalIdeal partner;
    bool hypotheses_met;  // primitive nondegenerate form guarantees uniqueness
};

/// The unique balancing partner M = (I_f : N) for primitive nondegenerate
/// forms; computed for any input but flagged when existence is not
/// guaranteed by the hypotheses.
inline PartnerResult balancing_partner(const RingContext& ctx, const FractionalIdeal& n) {
    FractionalIdeal m = ideal_quotient(FractionalIdeal(ctx.If), n);
    return {std::move(m), ctx.stats.primitive && ctx.stats.disc != 0};
}

struct SelfBalanceVerdict {
    bool contained;    // M^2 * (k) ⊆ I_f
    bool norm_ok;      // |M|^2 * |(k)| = |I_f|
    bool fixed_point;  // M = (I_f : M*(k)), the unique-partner identity

    bool self_balanced() const { return contained && norm_ok; }
};

/// Self-balance verdict for (M, k), with k normalized so that the pairing of
/// the corresponding symmetric tensor is x ⊗ y -> k*x*y.  All three clauses
/// are invariant under (M, k) -> (lambda*M, lambda^-2 * k).
inline SelfBalanceVerdict self_balance_check(const RingContext& ctx, const FractionalIdeal& m,
                                             const ThetaVec& k) {
    if (ctx.stats.disc == 0) throw error("degenerate form");
    if (det(k.mult_matrix()) == 0) throw error("k is a zero divisor");
    FractionalIdeal pk = principal_ideal(ctx, k);
    FractionalIdeal m2k = ideal_product(ideal_product(m, m), pk);
    SelfBalanceVerdict v{};
    v.contained = ctx.If.contains(m2k.lattice());
    Rat nm = ideal_norm(ctx.ring, m.lattice());
    v.norm_ok = nm * nm * ideal_norm(ctx.ring, pk.lattice()) == ideal_norm(ctx.ring, ctx.If);
    FractionalIdeal mk = ideal_product(m, pk);
    v.fixed_point = ideal_quotient(FractionalIdeal(ctx.If), mk) == m;
    return v;
}

/// Random full-rank ideal: a random lattice saturated under the zeta action.
inline FractionalIdeal random_fractional_ideal(const RingContext& ctx, Rng& rng,
                                               long bound = 3) {
    const std::size_t n = ctx.f.degree();
    RatMat start(n, n);
    do {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) start(i, j) = Rat(rng.uniform(-bound, bound));
    } while (det(start) == 0);
    Lattice l(ctx.f, start);
    for (int iter = 0; iter < 64; ++iter) {
        std::vector<ThetaVec> gens = l.basis_elements();
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                gens.push_back(ThetaVec::zeta(ctx.f, k) * l.basis_element(j));
        Lattice next = Lattice::spanned_by(ctx.f, gens);
        if (next == l) return FractionalIdeal(l);
        l = next;
    }
    throw error("ideal saturation did not stabilize");
}

/// Realizes both members of a based balanced pair as fractional ideals with
/// representatives chosen so the pairing is literal multiplication:
/// mu_j * nu_k = pairing[j][k] exactly.
inline std::pair<FractionalIdeal, FractionalIdeal> realize_balanced_pair(
    const BalancedPair& p, const RingContext& ctx) {
    if (ctx.f != p.ctx_form) throw error("context mismatch");
    if (ctx.stats.disc == 0) throw error("degenerate form");
    const std::size_t n = p.n();
    RatMat emb = detail::module_embedding(p.m);
    std::vector<ThetaVec> mu;
    for (std::size_t j = 0; j < n; ++j) mu.emplace_back(p.ctx_form, emb.col(j));

    // pick a combination u = sum a_j * mu_j that is invertible in Q[theta]/F
    std::vector<long> a(n, 0);
    ThetaVec u = ThetaVec::zero(p.ctx_form);
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
        a.assign(n, 0);
        a[j] = 1;
        u = mu[j];
        found = det(u.mult_matrix()) != 0;
    }
    if (!found) {
        std::vector<long> probe(n, -2);
        while (!found) {
            u = ThetaVec::zero(p.ctx_form);
            for (std::size_t j = 0; j < n; ++j) u = u + mu[j] * Rat(probe[j]);
            if (det(u.mult_matrix()) != 0) {
                a.assign(probe.begin(), probe.end());
                found = true;
                break;
            }
            std::size_t pos = 0;
            while (pos < n && probe[pos] == 2) probe[pos++] = -2;
            if (pos == n) throw error("no invertible combination found");
            ++probe[pos];
        }
    }

    std::vector<ThetaVec> nu;
    for (std::size_t k = 0; k < n; ++k) {
        ThetaVec num = ThetaVec::zero(p.ctx_form);
        for (std::size_t j = 0; j < n; ++j) num = num + p.pairing[j][k] * Rat(a[j]);
        nu.push_back(theta_divide(num, u));
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (mu[j] * nu[k] != p.pairing[j][k])
                throw error("pairing is not multiplication in the chosen representatives");

    return {FractionalIdeal(Lattice(p.ctx_form, emb)),
            FractionalIdeal(Lattice::spanned_by(p.ctx_form, nu))};
}

/// For a pair coming from a symmetric tensor (mirror modules), both slots
/// embed identically and the pairing is x ⊗ y -> k*x*y for a single
/// invertible k, which is recovered and asserted here.
inline std::pair<FractionalIdeal, ThetaVec> realize_self_balanced(const BalancedPair& p,
                                                                  const RingContext& ctx) {
    const std::size_t n = p.n();
    for (std::size_t k = 1; k < n; ++k)
        if (p.m.action(k) != p.n_mod.action(k).transpose())
            throw error("pair does not come from a symmetric tensor");
    auto [m_ideal, n_ideal] = realize_balanced_pair(p, ctx);
    RatMat emb = detail::module_embedding(p.m);
    std::vector<ThetaVec> mu;
    for (std::size_t j = 0; j < n; ++j) mu.emplace_back(p.ctx_form, emb.col(j));
    // k = pairing[j][l] / (mu_j * mu_l) through an invertible combination
    ThetaVec num = ThetaVec::zero(p.ctx_form);
    ThetaVec den = ThetaVec::zero(p.ctx_form);
    std::vector<long> probe(n, 0);
    probe[0] = 1;
    while (true) {
        ThetaVec u = ThetaVec::zero(p.ctx_form);
        for (std::size_t j = 0; j < n; ++j) u = u + mu[j] * Rat(probe[j]);
        if (det(u.mult_matrix()) != 0) {
            num = ThetaVec::zero(p.ctx_form);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l)
                    num = num + p.pairing[j][l] * (Rat(probe[j]) * Rat(probe[l]));
            den = u * u;
            break;
        }
        std::size_t pos = 0;
        while (pos < n && probe[pos] == 2) probe[pos++] = -2;
        if (pos == n) throw error("no invertible combination found");
        ++probe[pos];
    }
    ThetaVec k = theta_divide(num, den);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
            if (p.pairing[j][l] != k * mu[j] * mu[l])
                throw error("pairing is not k*x*y in the chosen representative");
    return {std::move(m_ideal), std::move(k)};
}

}  // namespace binform
