#pragma once

#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "harness.hpp"
#include "ideal_parse.hpp"
#include "radial.hpp"
#include "report.hpp"

// Canonical JSON encoding: object keys sorted (the default map-backed json
// type), rationals as {"num","den"} decimal strings, exponent vectors as
// integer arrays, no timestamps, trailing newline from emit_json.

namespace staircase {

inline constexpr const char* tool_version = "1.0.0";

inline nlohmann::json to_json(const Rational& r) {
    return nlohmann::json{{"num", num(r).str()}, {"den", den(r).str()}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
    BigInt n(j.at("num").get<std::string>());
    BigInt d(j.at("den").get<std::string>());
    if (d == 0) throw parse_error("rational with zero denominator", 1);
    return Rational(n, d);
}

inline nlohmann::json to_json(const QuantityValue& q) {
    return std::visit(
        [](const auto& v) -> nlohmann::json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>)
                return to_json(v);
            else
                return nlohmann::json(v);
        },
        q);
}

inline nlohmann::json to_json(const MonomialIdeal& a) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : a.generators()) gens.push_back(g);
    return nlohmann::json{{"dim", a.dim()}, {"generators", gens}, {"text", format_ideal(a)}};
}

inline MonomialIdeal ideal_from_json(const nlohmann::json& j, const Limits& limits = {}) {
    int dim = j.at("dim").get<int>();
    auto gens = j.at("generators").get<std::vector<ExponentVector>>();
    return MonomialIdeal::from_generators(dim, gens, limits);
}

inline nlohmann::json to_json(const CheckReport& rep) {
    nlohmann::json j;
    j["check"] = rep.check;
    if (rep.ideal) j["ideal"] = to_json(*rep.ideal);
    if (rep.c) j["c"] = to_json(*rep.c);
    nlohmann::json quantities = nlohmann::json::object();
    for (const auto& [name, value] : rep.quantities) quantities[name] = to_json(value);
    j["quantities"] = quantities;
    j["verdict"] = to_string(rep.verdict);
    if (!rep.witness.empty()) j["witness"] = rep.witness;
    return j;
}

inline nlohmann::json to_json(const Limits& limits) {
    return nlohmann::json{{"max_dim", limits.max_dim},
                          {"max_generators", limits.max_generators},
                          {"max_enumeration", limits.max_enumeration},
                          {"max_exponent", limits.max_exponent}};
}

inline nlohmann::json to_json(const DualNormalSet& dual) {
    nlohmann::json normals = nlohmann::json::array();
    for (const auto& v : dual.normals) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : v) row.push_back(to_json(x));
        normals.push_back(row);
    }
    return nlohmann::json{{"dim", dual.n}, {"normals", normals}};
}

inline nlohmann::json to_json(const RadialSample& s) {
    return nlohmann::json{
        {"n", s.n}, {"resolution", s.resolution}, {"grid", s.grid}, {"radii", s.radii}};
}

inline nlohmann::json to_json(const SweepConfig& config) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : config.c_values) cs.push_back(to_json(c));
    return nlohmann::json{{"dimensions", config.dimensions},
                          {"ideals_per_dimension", config.ideals_per_dimension},
                          {"seed", config.seed},
                          {"max_exponent", config.max_exponent},
                          {"c_values", cs},
                          {"checks", config.checks},
                          {"parallelism", config.parallelism},
                          {"limits", to_json(config.limits)}};
}

inline nlohmann::json to_json(const SweepSummary& summary) {
    return nlohmann::json{{"holds", summary.holds},
                          {"holds_with_equality", summary.holds_with_equality},
                          {"not_applicable", summary.not_applicable},
                          {"violated", summary.violated}};
}

inline nlohmann::json sweep_document(const SweepConfig& config, const SweepResult& result) {
    nlohmann::json j;
    j["version"] = tool_version;
    j["command"] = "sweep";
    j["config"] = to_json(config);
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : result.cases) {
        nlohmann::json jc;
        jc["case"] = c.case_id;
        jc["ideal"] = to_json(c.ideal);
        nlohmann::json reports = nlohmann::json::array();
        for (const auto& rep : c.reports) reports.push_back(to_json(rep));
        jc["reports"] = reports;
        cases.push_back(jc);
    }
    j["cases"] = cases;
    nlohmann::json skips = nlohmann::json::array();
    for (const auto& s : result.skips)
        skips.push_back(nlohmann::json{{"case", s.case_id}, {"reason", s.reason}});
    j["skips"] = skips;
    j["summary"] = to_json(result.summary);
    return j;
}

inline std::string emit_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

} // namespace staircase
