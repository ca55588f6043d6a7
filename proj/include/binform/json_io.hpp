#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "binform/groups.hpp"
#include "binform/ideals.hpp"
#include "binform/pairing.hpp"

namespace binform {

// Canonical wire format: nlohmann objects keep keys sorted and dump() emits
// no whitespace, so serialize(parse(x)) is byte-stable.  All big integers are
// decimal strings; rationals are "p/q" (lowest terms, "/1" omitted).
using json = nlohmann::json;

inline json int_mat_to_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json rat_mat_to_json(const RatMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int((long)j.get<long long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw error("expected integer or decimal string");
}

inline Rat json_to_rat(const json& j) {
    if (j.is_number_integer()) return Rat(Int((long)j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw error("expected rational string");
}

inline IntMat json_to_int_mat(const json& j) {
    if (!j.is_array() || j.empty()) throw error("expected a matrix");
    std::size_t rows = j.size(), cols = j[0].size();
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw error("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = json_to_int(j[i][c]);
    }
    return m;
}

inline RatMat json_to_rat_mat(const json& j) {
    if (!j.is_array() || j.empty()) throw error("expected a matrix");
    std::size_t rows = j.size(), cols = j[0].size();
    RatMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw error("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = json_to_rat(j[i][c]);
    }
    return m;
}

inline json form_to_json(const BinaryForm& f) {
    json coeffs = json::array();
    for (const Int& c : f.coeffs()) coeffs.push_back(to_string(c));
    return json{{"coeffs", std::move(coeffs)}};
}

/// Accepts {"coeffs": [...]} or a bare coefficient array.
inline BinaryForm form_from_json(const json& j) {
    const json& arr = j.is_object() ? j.at("coeffs") : j;
    if (!arr.is_array()) throw error("form wants a coefficient array");
    std::vector<Int> c;
    for (const auto& v : arr) c.push_back(json_to_int(v));
    return BinaryForm(std::move(c));
}

inline json tensor_to_json(const Tensor& t) {
    return json{{"n", t.n()}, {"A1", int_mat_to_json(t.a1)}, {"A2", int_mat_to_json(t.a2)}};
}

inline Tensor tensor_from_json(const json& j) {
    Tensor t(json_to_int_mat(j.at("A1")), json_to_int_mat(j.at("A2")));
    if (j.contains("n") && j.at("n").get<std::size_t>() != t.n())
        throw error("tensor size field disagrees with the slices");
    return t;
}

inline json gl2_to_json(const GL2& g) {
    return json{{"a", to_string(g.a)},
                {"b", to_string(g.b)},
                {"c", to_string(g.c)},
                {"d", to_string(g.d)}};
}

inline GL2 gl2_from_json(const json& j) {
    return GL2(json_to_int(j.at("a")), json_to_int(j.at("b")), json_to_int(j.at("c")),
               json_to_int(j.at("d")));
}

inline json theta_vec_to_json(const ThetaVec& v) {
    json coords = json::array();
    for (const Rat& c : v.coords()) coords.push_back(to_string(c));
    return coords;
}

inline json pair_to_json(const BalancedPair& p) {
    json actions_m = json::array(), actions_n = json::array();
    for (std::size_t k = 1; k < p.n(); ++k) {
        actions_m.push_back(int_mat_to_json(p.m.action(k)));
        actions_n.push_back(int_mat_to_json(p.n_mod.action(k)));
    }
    json pairing = json::array();
    for (std::size_t j = 0; j < p.n(); ++j) {
        json row = json::array();
        for (std::size_t k = 0; k < p.n(); ++k) row.push_back(theta_vec_to_json(p.pairing[j][k]));
        pairing.push_back(std::move(row));
    }
    return json{{"form", form_to_json(p.form)},
                {"normalized_form", form_to_json(p.ctx_form)},
                {"transport", gl2_to_json(p.transport)},
                {"M_actions", std::move(actions_m)},
                {"N_actions", std::move(actions_n)},
                {"pairing", std::move(pairing)},
                {"tensor", tensor_to_json(p.tensor)}};
}

inline BalancedPair pair_from_json(const json& j) {
    BinaryForm form = form_from_json(j.at("form"));
    BinaryForm ctx_form = form_from_json(j.at("normalized_form"));
    GL2 transport = gl2_from_json(j.at("transport"));
    const std::size_t n = form.degree();
    std::vector<IntMat> am, an;
    for (const auto& m : j.at("M_actions")) am.push_back(json_to_int_mat(m));
    for (const auto& m : j.at("N_actions")) an.push_back(json_to_int_mat(m));
    BasedModule mm(ctx_form, Side::row, std::move(am));
    BasedModule nn(ctx_form, Side::column, std::move(an));
    const json& pj = j.at("pairing");
    if (pj.size() != n) throw error("pairing shape mismatch");
    std::vector<std::vector<ThetaVec>> pairing;
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<ThetaVec> row;
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<Rat> coords;
            for (const auto& v : pj[r][c]) coords.push_back(json_to_rat(v));
            row.emplace_back(ctx_form, std::move(coords));
        }
        pairing.push_back(std::move(row));
    }
    Tensor t = tensor_from_json(j.at("tensor"));
    return BalancedPair{std::move(form), transport,       std::move(ctx_form),
                        std::move(mm),   std::move(nn),   std::move(pairing),
                        std::move(t)};
}

inline json verdict_to_json(const BalanceVerdict& v) {
    return json{{"contained", v.contained},
                {"norm_ok", v.norm_ok},
                {"index_ok", v.index_ok},
                {"criteria_agree", v.criteria_agree},
                {"norms",
                 json{{"M", to_string(v.norm_m)},
                      {"N", to_string(v.norm_n)},
                      {"If", to_string(v.norm_if)}}}};
}

inline json orbit_report_to_json(const OrbitReport& r) {
    json classes = json::array();
    for (const auto& c : r.classes)
        classes.push_back(json{{"representative", tensor_to_json(c.representative)},
                               {"size_in_box", c.size_in_box}});
    return json{{"form", form_to_json(r.form)},
                {"entry_bound", r.entry_bound},
                {"classes", std::move(classes)},
                {"budget_limited", r.budget_limited}};
}

/// cmd_ring payload: structure constants, discriminant, primitivity, module
/// lattices and their indices/norms, plus the normalization when applied.
inline json ring_report_to_json(const BinaryForm& input, const GL2& transport,
                                const RingContext& ctx) {
    const std::size_t n = ctx.f.degree();
    json sc = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            json entry = json::array();
            for (std::size_t k = 0; k < n; ++k)
                entry.push_back(to_string(ctx.ring.struct_const(i, j, k)));
            row.push_back(std::move(entry));
        }
        sc.push_back(std::move(row));
    }
    return json{{"form", form_to_json(input)},
                {"normalized_form", form_to_json(ctx.f)},
                {"transport", gl2_to_json(transport)},
                {"struct_consts", std::move(sc)},
                {"disc", to_string(ctx.stats.disc)},
                {"primitive", ctx.stats.primitive},
                {"If_basis", rat_mat_to_json(ctx.If.basis())},
                {"Jf_basis", rat_mat_to_json(ctx.Jf.basis())},
                {"index_J_over_I", to_string(lattice_index(ctx.If.basis(), ctx.Jf.basis()))},
                {"norm_If", to_string(ideal_norm(ctx.ring, ctx.If))},
                {"norm_Jf", to_string(ideal_norm(ctx.ring, ctx.Jf))}};
}

inline json ideal_to_json(const FractionalIdeal& i) {
    return json{{"basis", rat_mat_to_json(i.basis())}};
}

inline FractionalIdeal ideal_from_json(const BinaryForm& f, const json& j) {
    const json& b = j.is_object() ? j.at("basis") : j;
    return FractionalIdeal(Lattice(f, json_to_rat_mat(b)));
}

}  // namespace binform
