#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binform/json_io.hpp"
#include "binform/parallel.hpp"
#include "binform/universal.hpp"

namespace binform {

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::size_t count = 200;
    long bound = 5;
    std::size_t n = 0;  // 0 = suite-default degree range
    std::optional<BinaryForm> form;
    unsigned workers = 0;  // 0 = hardware concurrency
};

struct SuiteReport {
    std::string suite;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> artifacts;  // canonical JSON per failing trial
};

namespace sampling {

inline IntMat random_int_mat(Rng& rng, std::size_t n, long bound) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Int(rng.uniform(-bound, bound));
    return m;
}

inline Tensor random_nondegenerate_tensor(Rng& rng, std::size_t n, long bound) {
    while (true) {
        Tensor t(random_int_mat(rng, n, bound), random_int_mat(rng, n, bound));
        if (!has_zero_det_form(t)) return t;
    }
}

inline Tensor random_symmetric_tensor(Rng& rng, std::size_t n, long bound) {
    while (true) {
        IntMat a1(n, n), a2(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                a1(i, j) = a1(j, i) = Int(rng.uniform(-bound, bound));
                a2(i, j) = a2(j, i) = Int(rng.uniform(-bound, bound));
            }
        Tensor t(std::move(a1), std::move(a2));
        if (!has_zero_det_form(t)) return t;
    }
}

inline BinaryForm random_form(Rng& rng, std::size_t n, long bound) {
    while (true) {
        std::vector<Int> c(n + 1);
        for (auto& v : c) v = Int(rng.uniform(-bound, bound));
        if (c[0] == 0) continue;
        return BinaryForm(std::move(c));
    }
}

inline BinaryForm random_nice_form(Rng& rng, std::size_t n, long bound) {
    while (true) {
        BinaryForm f = random_form(rng, n, bound);
        FormStats s = form_stats(f);
        if (s.primitive && s.disc != 0) return f;
    }
}

inline GL2 random_gl2_word(Rng& rng) {
    GL2 g = GL2::identity();
    for (int i = 0; i < 4; ++i) {
        switch (rng.uniform(0, 2)) {
            case 0: g = g * GL2::shear(Int(rng.uniform(-2, 2))); break;
            case 1: g = g * GL2(0, 1, 1, 0); break;
            default: g = g * GL2(1, 0, Int(rng.uniform(-2, 2)), 1); break;
        }
    }
    return g;
}

inline IntMat random_unimodular(Rng& rng, std::size_t n) {
    IntMat u = IntMat::identity(n);
    for (int s = 0; s < 6; ++s) {
        std::size_t i = (std::size_t)rng.uniform(0, (long)n - 1);
        std::size_t j = (std::size_t)rng.uniform(0, (long)n - 1);
        IntMat e = IntMat::identity(n);
        if (i == j)
            e(i, i) = -1;
        else
            e(i, j) = Int(rng.uniform(-2, 2));
        u = u * e;
    }
    return u;
}

}  // namespace sampling

namespace detail {

inline std::size_t pick_n(const SuiteConfig& cfg, std::size_t i, std::size_t lo,
                          std::size_t hi) {
    if (cfg.n) return cfg.n;
    return lo + i % (hi - lo + 1);
}

inline TrialResult fail_with(json artifact) { return {false, artifact.dump()}; }

}  // namespace detail

inline SuiteReport run_roundtrip_suite(const SuiteConfig& cfg) {
    auto results = run_trials(
        cfg.seed, cfg.count,
        [&](std::size_t i, Rng& rng) -> TrialResult {
            std::size_t n = detail::pick_n(cfg, i, 2, 5);
            Tensor a = sampling::random_nondegenerate_tensor(rng, n, cfg.bound);
            BalancedPair p = psi(a);  // verifies the pair invariants internally
            if (phi(p) != a)
                return detail::fail_with(json{{"check", "roundtrip"}, {"tensor", tensor_to_json(a)}});
            return {true, {}};
        },
        cfg.workers);
    SuiteReport rep{"roundtrip", results.size(), 0, {}};
    for (const auto& r : results)
        if (!r.ok) {
            ++rep.failures;
            rep.artifacts.push_back(r.detail);
        }
    return rep;
}

inline SuiteReport run_ring_suite(const SuiteConfig& cfg) {
    auto results = run_trials(
        cfg.seed, cfg.count,
        [&](std::size_t i, Rng& rng) -> TrialResult {
            std::size_t n = detail::pick_n(cfg, i, 2, 6);
            BinaryForm f = cfg.form ? *cfg.form : sampling::random_form(rng, n, 9);
            n = f.degree();
            auto bail = [&](const char* what) {
                return detail::fail_with(json{{"check", what}, {"form", form_to_json(f)}});
            };
            FormRing ring(f);
            if (!ring.axioms_hold()) return bail("ring-axioms");
            // dual table for zeta_i * theta^k
            for (std::size_t zi = 0; zi < n; ++zi)
                for (std::size_t k = 0; k < n; ++k) {
                    Rat got = zeta_dual_top(ThetaVec::zeta(f, zi) * ThetaVec::theta_pow(f, k));
                    Rat want(0);
                    if (zi > 0 && k + zi == n - 1)
                        want = 1;
                    else if (zi == 0 && k == n - 1)
                        want = Rat(1) / Rat(f.leading());
                    else if (zi > 0 && k == n - 1)
                        want = -Rat(f.coeff(zi)) / Rat(f.leading());
                    if (got != want) return bail("dual-table");
                }
            // dual-functional identities on a random element
            std::vector<Rat> rc(n);
            for (auto& v : rc) v = make_rat(Int(rng.uniform(-9, 9)), Int(rng.uniform(1, 3)));
            ThetaVec r(f, std::move(rc));
            if (zeta_dual_top(ThetaVec::theta_pow(f, 1) * r) != zeta_dual_second(r))
                return bail("shift-identity");
            for (std::size_t k = 1; k < n; ++k)
                if (!getcoeff_identity(f, r, k)) return bail("getcoeff");
            auto [If, Jf] = make_If_Jf(f);
            if (lattice_index(If.basis(), Jf.basis()) != Rat(int_abs(f.leading())))
                return bail("index-J-over-I");
            if (ideal_norm(ring, Jf) * Rat(int_abs(f.leading())) != ideal_norm(ring, If))
                return bail("norm-ratio");
            // membership characterization on a random J_f element
            ThetaVec jr = ThetaVec::zero(f);
            for (std::size_t j = 0; j < n; ++j)
                jr = jr + Jf.basis_element(j) * Rat(rng.uniform(-3, 3));
            if (If.contains(jr) != is_integer(zeta_dual_second(jr)))
                return bail("membership");
            return {true, {}};
        },
        cfg.workers);
    SuiteReport rep{"ring", results.size(), 0, {}};
    for (const auto& r : results)
        if (!r.ok) {
            ++rep.failures;
            rep.artifacts.push_back(r.detail);
        }
    return rep;
}

inline SuiteReport run_equivariance_suite(const SuiteConfig& cfg) {
    auto results = run_trials(
        cfg.seed, cfg.count,
        [&](std::size_t i, Rng& rng) -> TrialResult {
            std::size_t n = detail::pick_n(cfg, i, 2, 4);
            Tensor a = sampling::random_nondegenerate_tensor(rng, n, cfg.bound);
            GL2 g = sampling::random_gl2_word(rng);
            GL2 h = sampling::random_gl2_word(rng);
            // gl2_act_tensor itself asserts Det(g(A)) = g(Det(A))
            Tensor ga = gl2_act_tensor(g, gl2_act_tensor(h, a));
            if (ga != gl2_act_tensor(g * h, a))
                return detail::fail_with(json{{"check", "group-law"}, {"tensor", tensor_to_json(a)}});
            IntMat u = sampling::random_unimodular(rng, n);
            IntMat v = sampling::random_unimodular(rng, n);
            if (det(u) * det(v) != 1)
                for (std::size_t j = 0; j < n; ++j) v(0, j) = -v(0, j);
            Tensor ha = g_act_tensor(GPair(u, v), a);
            if (det_form_coeffs(ha) != det_form_coeffs(a))
                return detail::fail_with(
                    json{{"check", "g-invariance"}, {"tensor", tensor_to_json(a)}});
            return {true, {}};
        },
        cfg.workers);
    SuiteReport rep{"equivariance", results.size(), 0, {}};
    for (const auto& r : results)
        if (!r.ok) {
            ++rep.failures;
            rep.artifacts.push_back(r.detail);
        }
    return rep;
}

inline SuiteReport run_balance_suite(const SuiteConfig& cfg) {
    if (cfg.form) {
        FormStats s = form_stats(*cfg.form);
        if (!s.primitive || s.disc == 0 || cfg.form->leading() == 0)
            throw error("balance suite needs a primitive nondegenerate form with f0 != 0");
    }
    auto results = run_trials(
        cfg.seed, cfg.count,
        [&](std::size_t i, Rng& rng) -> TrialResult {
            std::size_t n = detail::pick_n(cfg, i, 2, 4);
            BinaryForm f = cfg.form ? *cfg.form : sampling::random_nice_form(rng, n, 6);
            RingContext ctx(f);
            FractionalIdeal nn = random_fractional_ideal(ctx, rng);
            auto [m, hyp] = balancing_partner(ctx, nn);
            BalanceVerdict v = check_balanced(ctx, m, nn);
            json artifact{{"form", form_to_json(f)},
                          {"N_basis", rat_mat_to_json(nn.basis())},
                          {"verdict", verdict_to_json(v)}};
            if (!(v.contained && v.norm_ok && v.index_ok && v.criteria_agree))
                return detail::fail_with(json{{"check", "partner-balanced"}, {"data", artifact}});
            // deliberately broken pair: criteria must agree on the failure
            FractionalIdeal broken{m.lattice().scaled(Rat(2))};
            BalanceVerdict w = check_balanced(ctx, broken, nn);
            if (w.balanced() || !w.criteria_agree)
                return detail::fail_with(json{{"check", "broken-pair"}, {"data", artifact}});
            return {true, {}};
        },
        cfg.workers);
    SuiteReport rep{"balance", results.size(), 0, {}};
    for (const auto& r : results)
        if (!r.ok) {
            ++rep.failures;
            rep.artifacts.push_back(r.detail);
        }
    return rep;
}

inline SuiteReport run_universal_suite(const SuiteConfig& cfg) {
    auto results = run_trials(
        cfg.seed, cfg.count,
        [&](std::size_t i, Rng& rng) -> TrialResult {
            std::size_t n = detail::pick_n(cfg, i, 2, 4);
            long box = cfg.bound > 0 ? cfg.bound : 9;
            Specialization s = Specialization::random(rng, n, box, true, true);
            while (det(s.tensor.a1) == 0)
                s = Specialization::random(rng, n, box, true, true);
            json artifact{{"tensor", tensor_to_json(s.tensor)}};
            if (!check_nodenom(s, n - 1))
                return detail::fail_with(json{{"check", "nodenom"}, {"data", artifact}});
            for (std::size_t l = 0; l < n; ++l)
                if (!check_correspondence_forward(s, l))
                    return detail::fail_with(json{{"check", "forward"}, {"data", artifact}});
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (!check_correspondence_backward(s, k, l))
                        return detail::fail_with(json{{"check", "backward"}, {"data", artifact}});
            return {true, {}};
        },
        cfg.workers);
    SuiteReport rep{"universal", results.size(), 0, {}};
    for (const auto& r : results)
        if (!r.ok) {
            ++rep.failures;
            rep.artifacts.push_back(r.detail);
        }
    return rep;
}

inline SuiteReport run_symmetric_suite(const SuiteConfig& cfg) {
    auto results = run_trials(
        cfg.seed, cfg.count,
        [&](std::size_t i, Rng& rng) -> TrialResult {
            std::size_t n = detail::pick_n(cfg, i, 2, 4);
            Tensor a = sampling::random_symmetric_tensor(rng, n, cfg.bound);
            SymmetricReport r = symmetric_ops(a);  // asserts mirror actions
            json artifact{{"tensor", tensor_to_json(a)}};
            if (!r.is_symmetric)
                return detail::fail_with(json{{"check", "symmetric-flag"}, {"data", artifact}});
            const BalancedPair& p = *r.self_pair;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (p.pairing[j][k] != p.pairing[k][j])
                        return detail::fail_with(
                            json{{"check", "pairing-symmetry"}, {"data", artifact}});
            if (!phi(p).is_symmetric() || phi(p) != a)
                return detail::fail_with(json{{"check", "phi-symmetric"}, {"data", artifact}});
            return {true, {}};
        },
        cfg.workers);
    SuiteReport rep{"symmetric", results.size(), 0, {}};
    for (const auto& r : results)
        if (!r.ok) {
            ++rep.failures;
            rep.artifacts.push_back(r.detail);
        }
    return rep;
}

inline std::vector<SuiteReport> run_suites(const std::string& name, const SuiteConfig& cfg) {
    if (name == "roundtrip") return {run_roundtrip_suite(cfg)};
    if (name == "ring") return {run_ring_suite(cfg)};
    if (name == "balance") return {run_balance_suite(cfg)};
    if (name == "equivariance") return {run_equivariance_suite(cfg)};
    if (name == "universal") return {run_universal_suite(cfg)};
    if (name == "symmetric") return {run_symmetric_suite(cfg)};
    if (name == "all")
        return {run_roundtrip_suite(cfg), run_ring_suite(cfg),      run_balance_suite(cfg),
                run_equivariance_suite(cfg), run_universal_suite(cfg), run_symmetric_suite(cfg)};
    throw error("unknown suite: " + name);
}

inline json suite_report_to_json(const SuiteReport& r, std::size_t artifact_cap = 8) {
    json artifacts = json::array();
    for (std::size_t i = 0; i < r.artifacts.size() && i < artifact_cap; ++i)
        artifacts.push_back(json::parse(r.artifacts[i]));
    return json{{"suite", r.suite},
                {"trials", r.trials},
                {"failures", r.failures},
                {"artifacts", std::move(artifacts)}};
}

}  // namespace binform
