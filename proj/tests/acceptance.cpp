// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (zero tolerance).  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "binform/groups.hpp"
#include "binform/ideals.hpp"
#include "binform/parallel.hpp"
#include "binform/universal.hpp"
#include "binform/verify.hpp"

using namespace binform;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::size_t count_failures(const std::vector<TrialResult>& rs) {
    std::size_t f = 0;
    for (const auto& r : rs)
        if (!r.ok) ++f;
    return f;
}

// 1. phi(psi(A)) = A exactly: 1000 random tensors per n in {2,3,4,5},
//    entries in [-5,5], nonzero determinant form, under 60 seconds total.
void criterion_roundtrip() {
    auto start = std::chrono::steady_clock::now();
    std::size_t failures = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        auto rs = run_trials(1000 + n, 1000, [&](std::size_t, Rng& rng) -> TrialResult {
            Tensor a = sampling::random_nondegenerate_tensor(rng, n, 5);
            BalancedPair p = psi(a);  // all pair invariants asserted inside
            return {phi(p) == a, ""};
        });
        failures += count_failures(rs);
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[96];
    std::snprintf(buf, sizeof buf, "4000 tensors, %.1fs", secs);
    report(1, "round trip phi(psi(A)) = A, n = 2..5, 1000 each, < 60s",
           failures == 0 && secs < 60.0, buf);
}

// 2. Structure constants integral, multiplication commutative and associative
//    on the zeta-basis: 500 random forms per n in {2..6}, coefficients in
//    [-9,9] with f0 != 0.
void criterion_ring_axioms() {
    std::size_t failures = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        auto rs = run_trials(2000 + n, 500, [&](std::size_t, Rng& rng) -> TrialResult {
            BinaryForm f = sampling::random_form(rng, n, 9);
            FormRing ring(f);  // throws on any non-integral structure constant
            return {ring.axioms_hold(), ""};
        });
        failures += count_failures(rs);
    }
    report(2, "structure constants integral + ring axioms, 500 forms per n = 2..6",
           failures == 0, "2500 forms");
}

// 3. Dual-functional identities on 10^4 random (f, r, k) triples, plus the
//    exact closed-form table for zeta_dual_top(zeta_i * theta^k), whose
//    (i = 0, k = n-1) entry is 1/f0.
void criterion_dual_identities() {
    auto rs = run_trials(3000, 10000, [&](std::size_t i, Rng& rng) -> TrialResult {
        std::size_t n = 2 + i % 5;
        BinaryForm f = sampling::random_form(rng, n, 9);
        std::vector<Rat> rc(n);
        for (auto& v : rc) v = make_rat(Int(rng.uniform(-9, 9)), Int(rng.uniform(1, 4)));
        ThetaVec r(f, std::move(rc));
        std::size_t k = 1 + (std::size_t)rng.uniform(0, (long)n - 2);
        if (!getcoeff_identity(f, r, k)) return {false, "getcoeff"};
        if (zeta_dual_top(ThetaVec::theta_pow(f, 1) * r) != zeta_dual_second(r))
            return {false, "shift"};
        for (std::size_t zi = 0; zi < n; ++zi)
            for (std::size_t pk = 0; pk < n; ++pk) {
                Rat got = zeta_dual_top(ThetaVec::zeta(f, zi) * ThetaVec::theta_pow(f, pk));
                Rat want(0);
                if (zi > 0 && pk + zi == n - 1)
                    want = 1;
                else if (zi == 0 && pk == n - 1)
                    want = Rat(1) / Rat(f.leading());
                else if (zi > 0 && pk == n - 1)
                    want = -Rat(f.coeff(zi)) / Rat(f.leading());
                if (got != want) return {false, "table"};
            }
        return {true, ""};
    });
    report(3, "dual-functional identities + closed-form table, 10^4 triples",
           count_failures(rs) == 0);
}

// 4. Index facts: [J_f : I_f] = |f0| on 500 random forms, and the determinant
//    form endpoints det(A1) = c0, det(A2) = cn on every generated tensor.
void criterion_index_facts() {
    auto rs = run_trials(4000, 500, [&](std::size_t i, Rng& rng) -> TrialResult {
        std::size_t n = 2 + i % 5;
        BinaryForm f = sampling::random_form(rng, n, 9);
        auto [If, Jf] = make_If_Jf(f);
        if (lattice_index(If.basis(), Jf.basis()) != Rat(int_abs(f.leading())))
            return {false, "index"};
        Tensor a = sampling::random_nondegenerate_tensor(rng, 2 + i % 4, 5);
        std::vector<Int> c = det_form_coeffs(a);  // asserts the endpoints itself
        if (c[0] != det(a.a1) || c[a.n()] != det(a.a2)) return {false, "endpoints"};
        return {true, ""};
    });
    report(4, "[J_f : I_f] = |f0| on 500 forms; det endpoints on every tensor",
           count_failures(rs) == 0);
}

// 5. f0 * charpoly(theta action) = F(t, 1) on 1000 random tensors with
//    det(A1) != 0.
void criterion_characteristic() {
    auto rs = run_trials(5000, 1000, [&](std::size_t i, Rng& rng) -> TrialResult {
        std::size_t n = 2 + i % 4;
        Tensor a(sampling::random_int_mat(rng, n, 5), sampling::random_int_mat(rng, n, 5));
        while (det(a.a1) == 0)
            a = Tensor(sampling::random_int_mat(rng, n, 5), sampling::random_int_mat(rng, n, 5));
        BinaryForm f = det_binary_form(a);
        RatMat theta = -(inverse(a.a1) * to_rat(a.a2));
        return {charpoly(theta) * Rat(f.leading()) == to_rat(f.dehomogenized()), ""};
    });
    report(5, "f0 * charpoly(theta action) = F(t,1), 1000 tensors", count_failures(rs) == 0);
}

// 6. Determinant equivariance under 1000 random GL2 elements and invariance
//    under 1000 random G-pairs, exact.
void criterion_equivariance() {
    auto gl2 = run_trials(6000, 1000, [&](std::size_t i, Rng& rng) -> TrialResult {
        std::size_t n = 2 + i % 3;
        Tensor a = sampling::random_nondegenerate_tensor(rng, n, 5);
        GL2 g = sampling::random_gl2_word(rng);
        Tensor ga = gl2_act_tensor(g, a);  // asserts equivariance on every call
        return {det_binary_form(ga) == gl2_act_form(g, det_binary_form(a)), ""};
    });
    auto gp = run_trials(6001, 1000, [&](std::size_t i, Rng& rng) -> TrialResult {
        std::size_t n = 2 + i % 3;
        Tensor a = sampling::random_nondegenerate_tensor(rng, n, 5);
        IntMat u = sampling::random_unimodular(rng, n);
        IntMat v = sampling::random_unimodular(rng, n);
        if (det(u) * det(v) != 1)
            for (std::size_t j = 0; j < n; ++j) v(0, j) = -v(0, j);
        return {det_form_coeffs(g_act_tensor(GPair(u, v), a)) == det_form_coeffs(a), ""};
    });
    report(6, "Det equivariance (1000 GL2) and G-invariance (1000 pairs)",
           count_failures(gl2) + count_failures(gp) == 0);
}

// 7. Balancing criteria: 500 random ideals N over primitive nondegenerate
//    forms (n = 2,3,4) with M = (I_f : N) passing both criteria; verdicts
//    agree on 200 deliberately broken pairs; partner uniqueness against 10
//    perturbed lattices each on 50 of the instances.
void criterion_balance() {
    auto rs = run_trials(7000, 500, [&](std::size_t i, Rng& rng) -> TrialResult {
        std::size_t n = 2 + i % 3;
        BinaryForm f = sampling::random_nice_form(rng, n, 6);
        RingContext ctx(f);
        FractionalIdeal nn = random_fractional_ideal(ctx, rng);
        auto [m, hyp] = balancing_partner(ctx, nn);
        BalanceVerdict v = check_balanced(ctx, m, nn);
        if (!(v.contained && v.norm_ok && v.index_ok && v.criteria_agree))
            return {false, "partner"};
        if (i < 200) {  // deliberately broken: scaled partner
            BalanceVerdict w = check_balanced(ctx, FractionalIdeal{m.lattice().scaled(Rat(2))}, nn);
            if (w.balanced() || !w.criteria_agree || w.norm_ok || w.index_ok)
                return {false, "broken"};
        }
        if (i % 10 == 0) {  // partner uniqueness against perturbed lattices
            int perturbed = 0;
            for (long s : {2L, 3L, 5L, 7L, 11L}) {
                FractionalIdeal other{m.lattice().scaled(Rat(s))};
                FractionalIdeal inv{m.lattice().scaled(make_rat(1, s))};
                if (check_balanced(ctx, other, nn).balanced()) return {false, "uniqueness"};
                if (check_balanced(ctx, inv, nn).balanced()) return {false, "uniqueness"};
                perturbed += 2;
            }
            if (perturbed != 10) return {false, "uniqueness-count"};
        }
        return {true, ""};
    });
    report(7, "balance criteria agree: 500 partners, 200 broken, uniqueness probes",
           count_failures(rs) == 0);
}

// 8. Symmetric correspondence: 500 random symmetric tensors give mirror
//    action matrices and symmetric phi output.
void criterion_symmetric() {
    auto rs = run_trials(8000, 500, [&](std::size_t i, Rng& rng) -> TrialResult {
        std::size_t n = 2 + i % 3;
        Tensor a = sampling::random_symmetric_tensor(rng, n, 5);
        SymmetricReport r = symmetric_ops(a);  // asserts Z_k(M) = Z_k(N)^T
        if (!r.is_symmetric) return {false, "flag"};
        const BalancedPair& p = *r.self_pair;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (p.pairing[j][k] != p.pairing[k][j]) return {false, "pairing"};
        Tensor back = phi(p);
        return {back.is_symmetric() && back == a, ""};
    });
    report(8, "symmetric tensors: mirror modules and symmetric phi, 500 tensors",
           count_failures(rs) == 0);
}

// 9. Universal identities: 1000 random integer specializations for each of
//    n = 2,3,4, all three checks, exact.
void criterion_universal() {
    std::size_t failures = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        auto rs = run_trials(9000 + n, 1000, [&](std::size_t, Rng& rng) -> TrialResult {
            Specialization s = Specialization::random(rng, n, 9, true, true);
            while (det(s.tensor.a1) == 0) s = Specialization::random(rng, n, 9, true, true);
            if (!check_nodenom(s, n - 1)) return {false, "nodenom"};
            for (std::size_t l = 0; l < n; ++l)
                if (!check_correspondence_forward(s, l)) return {false, "forward"};
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (!check_correspondence_backward(s, k, l)) return {false, "backward"};
            return {true, ""};
        });
        failures += count_failures(rs);
    }
    report(9, "universal identities, 1000 specializations per n = 2,3,4", failures == 0);
}

// 10. Census sanity for f = x^2 + y^2 with entry bound 1: nonempty, every
//     member passes the round trip, one connected class, budget-limited.
void criterion_census() {
    BinaryForm f({Int(1), Int(0), Int(1)});
    OrbitReport rep = enumerate_orbits(f, 1, 6, 5000000);
    bool ok = rep.budget_limited && !rep.classes.empty();
    std::size_t total = 0;
    for (const auto& c : rep.classes) {
        total += c.size_in_box;
        ok = ok && det_binary_form(c.representative) == f;
        ok = ok && phi(psi(c.representative)) == c.representative;
    }
    ok = ok && total > 0 && rep.classes.size() == 1;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu tensors in box, %zu class(es)", total,
                  rep.classes.size());
    report(10, "census for x^2+y^2, bound 1: nonempty, round-trips, one class", ok, buf);
}

}  // namespace

int main() {
    criterion_roundtrip();
    criterion_ring_axioms();
    criterion_dual_identities();
    criterion_index_facts();
    criterion_characteristic();
    criterion_equivariance();
    criterion_balance();
    criterion_symmetric();
    criterion_universal();
    criterion_census();
    std::printf("%s: %d criterion failure(s)\n", g_failures ? "FAILURE" : "SUCCESS", g_failures);
    return g_failures ? 1 : 0;
}
