// Command-line front end: exact constructions for binary n-ic forms, the
// tensor <-> balanced-pair correspondence, bounded orbit censuses, balancing
// partners, and the seeded verification suites.
//
// Exit codes: 0 success, 1 property violation, 2 usage error or malformed
// input, 3 degenerate input (zero form / zero determinant form).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "binform/json_io.hpp"
#include "binform/verify.hpp"

using namespace binform;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

bool is_degenerate_message(const std::string& msg) {
    return msg == "zero form" || msg == "degenerate tensor: zero determinant form" ||
           msg == "degenerate form";
}

/// Inline JSON if the argument starts with '{' or '[', else a file path.
json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
        std::ifstream in(arg);
        if (!in) throw error("cannot open input file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw error(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const json& payload, const std::string& out_path) {
    std::string text = payload.dump();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw error("cannot open output file: " + out_path);
        out << text << "\n";
    }
    std::cout << text << "\n";
}

std::size_t max_enum_cap() {
    if (const char* env = std::getenv("BINFORM_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return (std::size_t)v;
        throw error("BINFORM_MAX_ENUM must be a positive integer");
    }
    return 5000000;
}

int cmd_ring(const std::string& form_arg, const std::string& out_path) {
    BinaryForm input = form_from_json(load_json_arg(form_arg));
    auto [g, f] = normalize_leading(input);
    RingContext ctx(f);
    emit(ring_report_to_json(input, g, ctx), out_path);
    return kExitOk;
}

int cmd_det(const std::string& tensor_arg, const std::string& out_path) {
    Tensor t = tensor_from_json(load_json_arg(tensor_arg));
    emit(form_to_json(det_binary_form(t)), out_path);
    return kExitOk;
}

int cmd_psi(const std::string& tensor_arg, const std::string& out_path) {
    Tensor t = tensor_from_json(load_json_arg(tensor_arg));
    emit(pair_to_json(psi(t)), out_path);
    return kExitOk;
}

int cmd_phi(const std::string& pair_arg, const std::string& out_path) {
    BalancedPair p = pair_from_json(load_json_arg(pair_arg));
    Tensor t = phi(p);
    if (t != p.tensor) throw error("pair data inconsistent: stored tensor disagrees");
    emit(tensor_to_json(t), out_path);
    return kExitOk;
}

int cmd_orbits(const std::string& form_arg, long bound, unsigned moves,
               const std::string& out_path) {
    BinaryForm f = form_from_json(load_json_arg(form_arg));
    OrbitReport rep = enumerate_orbits(f, bound, moves, max_enum_cap());
    emit(orbit_report_to_json(rep), out_path);
    return kExitOk;
}

int cmd_partner(const std::string& form_arg, const std::string& ideal_arg,
                const std::string& out_path) {
    BinaryForm input = form_from_json(load_json_arg(form_arg));
    auto [g, f] = normalize_leading(input);
    RingContext ctx(f);
    FractionalIdeal n = ideal_arg.empty() ? FractionalIdeal{ctx.rf}
                                          : ideal_from_json(f, load_json_arg(ideal_arg));
    auto [m, hypotheses_met] = balancing_partner(ctx, n);
    json payload{{"form", form_to_json(input)},
                 {"normalized_form", form_to_json(f)},
                 {"partner", ideal_to_json(m)},
                 {"hypotheses_met", hypotheses_met}};
    if (!hypotheses_met) payload["note"] = "partner existence not guaranteed";
    if (ctx.stats.disc != 0) payload["verdict"] = verdict_to_json(check_balanced(ctx, m, n));
    emit(payload, out_path);
    return kExitOk;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg, const std::string& out_path) {
    std::vector<SuiteReport> reports = run_suites(suite, cfg);
    json suites = json::array();
    std::size_t total_failures = 0;
    json all_artifacts = json::array();
    for (const auto& r : reports) {
        suites.push_back(suite_report_to_json(r));
        total_failures += r.failures;
        for (const auto& a : r.artifacts)
            all_artifacts.push_back(json{{"suite", r.suite}, {"input", json::parse(a)}});
    }
    json payload{{"config",
                  json{{"seed", cfg.seed},
                       {"count", cfg.count},
                       {"bound", cfg.bound},
                       {"n", cfg.n}}},
                 {"suites", std::move(suites)},
                 {"total_failures", total_failures}};
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw error("cannot open output file: " + out_path);
        out << all_artifacts.dump() << "\n";
    }
    std::cout << payload.dump() << "\n";
    return total_failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rings, modules, and tensor correspondences for binary n-ic forms"};
    app.require_subcommand(1);

    std::string form_arg, tensor_arg, pair_arg, ideal_arg, out_path, suite = "all";
    long bound = 1;
    unsigned moves = 6;
    SuiteConfig cfg;

    auto* ring = app.add_subcommand("ring", "ring, modules, and invariants of a form");
    ring->add_option("--form", form_arg, "form JSON or file")->required();
    ring->add_option("--out", out_path, "also write the report here");

    auto* det = app.add_subcommand("det", "determinant binary form of a tensor");
    det->add_option("--tensor", tensor_arg, "tensor JSON or file")->required();
    det->add_option("--out", out_path);

    auto* psi_cmd = app.add_subcommand("psi", "balanced pair attached to a tensor");
    psi_cmd->add_option("--tensor", tensor_arg)->required();
    psi_cmd->add_option("--out", out_path);

    auto* phi_cmd = app.add_subcommand("phi", "tensor attached to a balanced pair");
    phi_cmd->add_option("--pair", pair_arg)->required();
    phi_cmd->add_option("--out", out_path);

    auto* orbits = app.add_subcommand("orbits", "bounded census of tensors with a given form");
    orbits->add_option("--form", form_arg)->required();
    orbits->add_option("--bound", bound, "entry bound of the census box")
        ->check(CLI::PositiveNumber);
    orbits->add_option("--moves", moves, "word-length budget for the move search");
    orbits->add_option("--out", out_path);

    auto* partner = app.add_subcommand("partner", "balancing partner (I_f : N)");
    partner->add_option("--form", form_arg)->required();
    partner->add_option("--ideal", ideal_arg, "ideal basis JSON or file (default: R_f)");
    partner->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "seeded property suites");
    verify->add_option("--suite", suite,
                       "roundtrip|ring|balance|equivariance|universal|symmetric|all");
    verify->add_option("--n", cfg.n, "fix the degree (0 = suite default range)")
        ->check(CLI::Range(0, 8));
    verify->add_option("--bound", cfg.bound, "entry bound for sampled tensors")
        ->check(CLI::PositiveNumber);
    verify->add_option("--count", cfg.count, "trials per suite")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--form", form_arg, "pin the form for ring/balance suites");
    verify->add_option("--out", out_path, "write failure artifacts here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (ring->parsed()) return cmd_ring(form_arg, out_path);
        if (det->parsed()) return cmd_det(tensor_arg, out_path);
        if (psi_cmd->parsed()) return cmd_psi(tensor_arg, out_path);
        if (phi_cmd->parsed()) return cmd_phi(pair_arg, out_path);
        if (orbits->parsed()) return cmd_orbits(form_arg, bound, moves, out_path);
        if (partner->parsed()) return cmd_partner(form_arg, ideal_arg, out_path);
        if (verify->parsed()) {
            if (cfg.n == 1) throw error("degree must be 0 (default) or at least 2");
            if (!form_arg.empty()) cfg.form = form_from_json(load_json_arg(form_arg));
            return cmd_verify(suite, cfg, out_path);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_degenerate_message(e.what()) ? kExitDegenerate : kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
