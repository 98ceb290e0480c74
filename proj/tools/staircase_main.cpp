#include <CLI11.hpp>

#include <staircase/staircase.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace staircase;

namespace {

// Exit codes: 0 clean, 1 violated invariant or internal inconsistency,
// 2 bad input or configuration, 3 resource cap exceeded.
int error_exit_code(const std::exception& e) {
    if (dynamic_cast<const resource_limit_error*>(&e)) return 3;
    if (dynamic_cast<const internal_consistency_error*>(&e)) return 1;
    if (dynamic_cast<const error*>(&e)) return 2;
    return 1;
}

void print_error(const std::exception& e) {
    if (const auto* p = dynamic_cast<const parse_error*>(&e))
        std::cerr << "parse error at position " << p->position() << ": " << p->what() << "\n";
    else
        std::cerr << "error: " << e.what() << "\n";
}

nlohmann::json error_entry(const std::string& input, const std::exception& e) {
    nlohmann::json j;
    j["input"] = input;
    nlohmann::json err;
    if (const auto* p = dynamic_cast<const parse_error*>(&e)) {
        err["kind"] = "parse_error";
        err["position"] = static_cast<std::int64_t>(p->position());
    } else if (dynamic_cast<const resource_limit_error*>(&e)) {
        err["kind"] = "resource_limit_error";
    } else if (dynamic_cast<const internal_consistency_error*>(&e)) {
        err["kind"] = "internal_consistency_error";
    } else if (dynamic_cast<const error*>(&e)) {
        err["kind"] = "input_error";
    } else {
        err["kind"] = "error";
    }
    err["message"] = e.what();
    j["error"] = err;
    return j;
}

struct Outcome {
    nlohmann::json doc;
    std::string human;
    int code = 0;
};

std::string verdict_line(const CheckReport& rep) {
    std::ostringstream s;
    s << rep.check;
    if (rep.c) s << " [c=" << to_string(*rep.c) << "]";
    s << ": " << to_string(rep.verdict);
    if (!rep.witness.empty()) s << " (" << rep.witness << ")";
    return s.str();
}

std::string normals_line(const DualNormalSet& dual) {
    std::ostringstream s;
    for (std::size_t i = 0; i < dual.normals.size(); ++i) {
        if (i) s << ", ";
        s << "(";
        for (std::size_t j = 0; j < dual.normals[i].size(); ++j) {
            if (j) s << ", ";
            s << to_string(dual.normals[i][j]);
        }
        s << ")";
    }
    return s.str();
}

Outcome cmd_info(const std::string& text, int dim, const std::optional<Rational>& c,
                 const Limits& limits) {
    Outcome out;
    ParsedIdeal parsed = parse_ideal(text, dim, limits);
    const MonomialIdeal& a = parsed.ideal;
    auto& doc = out.doc;
    doc["command"] = "info";
    doc["input"] = text;
    doc["ideal"] = to_json(a);
    doc["minimalized"] = parsed.minimalized;
    doc["order"] = static_cast<std::int64_t>(order(a));
    const bool primary = is_m_primary(a);
    doc["m_primary"] = primary;

    std::ostringstream h;
    h << "ideal: " << format_ideal(a) << "\n";
    h << "dim: " << a.dim() << "\n";
    h << "minimal generators: " << a.generators().size() << "\n";
    h << "minimalized on ingest: " << (parsed.minimalized ? "yes" : "no") << "\n";
    h << "order: " << order(a) << "\n";
    h << "m-primary: " << (primary ? "yes" : "no") << "\n";
    if (!primary) {
        h << "finite-colength invariants are undefined for this input\n";
        out.human = h.str();
        return out;
    }

    BigInt len = colength(a, limits);
    doc["colength"] = to_json(detail::int_quantity(len));
    h << "colength: " << len.str() << "\n";

    if (a.is_unit()) {
        doc["multiplicity"] = 0;
        doc["complement_volume"] = to_json(Rational(0));
        doc["integral_closure"] = to_json(a);
        h << "multiplicity: 0\n";
        h << "complement volume: 0\n";
        h << "integral closure: (1)\n";
        out.human = h.str();
        return out;
    }

    DualNormalSet dual = dual_normals(a, limits);
    Rational vol = complement_volume(a, limits);
    BigInt e = multiplicity(a, limits);
    MonomialIdeal closure = integral_closure(a, limits);
    doc["normals"] = to_json(dual);
    doc["lct"] = to_json(lct(dual));
    doc["complement_volume"] = to_json(vol);
    doc["multiplicity"] = to_json(detail::int_quantity(e));
    doc["integral_closure"] = to_json(closure);
    h << "multiplicity: " << e.str() << "\n";
    h << "complement volume: " << to_string(vol) << "\n";
    h << "lct: " << to_string(lct(dual)) << "\n";
    h << "integral closure: " << format_ideal(closure) << "\n";
    h << "facet normals: " << normals_line(dual) << "\n";

    if (c) {
        doc["c"] = to_json(*c);
        doc["scaled_multiplicity"] = to_json(scaled_multiplicity(a, *c, limits));
        MonomialIdeal j = multiplier_ideal(a, dual, *c, limits);
        doc["multiplier_ideal"] = to_json(j);
        auto k = k_level(a, dual, *c, limits);
        doc["level"] = k ? nlohmann::json(static_cast<std::int64_t>(*k)) : nlohmann::json();
        h << "c: " << to_string(*c) << "\n";
        h << "scaled multiplicity: " << to_string(scaled_multiplicity(a, *c, limits)) << "\n";
        h << "multiplier ideal at c: " << format_ideal(j) << "\n";
        h << "level at c: " << (k ? std::to_string(*k) : std::string("undefined")) << "\n";
    }
    out.human = h.str();
    return out;
}

Outcome cmd_multiplier(const std::string& text, int dim, const Rational& c,
                       const Limits& limits) {
    Outcome out;
    ParsedIdeal parsed = parse_ideal(text, dim, limits);
    const MonomialIdeal& a = parsed.ideal;
    MonomialIdeal j = multiplier_ideal(a, c, limits);
    auto& doc = out.doc;
    doc["command"] = "multiplier";
    doc["input"] = text;
    doc["ideal"] = to_json(a);
    doc["c"] = to_json(c);
    doc["multiplier_ideal"] = to_json(j);
    doc["proper"] = !j.is_unit();
    doc["order"] = static_cast<std::int64_t>(order(j));
    doc["level"] = j.is_unit() ? nlohmann::json()
                               : nlohmann::json(static_cast<std::int64_t>(order(j) - 1));
    std::ostringstream h;
    h << "ideal: " << format_ideal(a) << "\n";
    h << "c: " << to_string(c) << "\n";
    h << "multiplier ideal: " << format_ideal(j) << "\n";
    h << "proper: " << (j.is_unit() ? "no" : "yes") << "\n";
    h << "order: " << order(j) << "\n";
    if (!j.is_unit()) h << "level: " << order(j) - 1 << "\n";
    if (!a.is_unit()) {
        doc["lct"] = to_json(lct(a, limits));
        h << "lct: " << to_string(lct(a, limits)) << "\n";
    }
    out.human = h.str();
    return out;
}

Outcome cmd_verify(const std::string& text, int dim, const std::vector<Rational>& cs,
                   const std::vector<std::string>& checks,
                   const std::optional<Rational>& expect_lct,
                   const std::optional<BigInt>& expect_length,
                   const std::optional<BigInt>& expect_e, const Limits& limits) {
    Outcome out;
    ParsedIdeal parsed = parse_ideal(text, dim, limits);
    IdealAnalysis ctx(parsed.ideal, limits);
    const MonomialIdeal& a = ctx.ideal();

    for (const auto& name : checks) {
        bool known = false;
        for (const auto& k : known_check_names()) known = known || k == name;
        if (!known) throw config_error("unknown check name: " + name);
    }

    std::vector<CheckReport> reports;
    for (const auto& name : checks) {
        if (check_is_c_dependent(name)) {
            for (const auto& c : cs) reports.push_back(run_named_check(name, ctx, c));
        } else {
            reports.push_back(run_named_check(name, ctx));
        }
    }

    auto expectation = [&](const char* what, const QuantityValue& expected,
                           const QuantityValue& actual, bool match) {
        CheckReport rep;
        rep.check = std::string("expected_") + what;
        rep.ideal = a;
        rep.add("expected", expected);
        rep.add("actual", actual);
        rep.conclude(match ? Verdict::Holds : Verdict::Violated,
                     match ? "" : std::string(what) + " does not match the expected value");
        reports.push_back(std::move(rep));
    };
    if (expect_lct) {
        if (a.is_unit())
            expectation("lct", *expect_lct, std::string("undefined"), false);
        else
            expectation("lct", *expect_lct, lct(a, limits), lct(a, limits) == *expect_lct);
    }
    if (expect_length) {
        BigInt len = ctx.colength();
        expectation("colength", detail::int_quantity(*expect_length),
                    detail::int_quantity(len), len == *expect_length);
    }
    if (expect_e) {
        BigInt e = a.is_unit() ? BigInt(0) : ctx.multiplicity();
        expectation("multiplicity", detail::int_quantity(*expect_e), detail::int_quantity(e),
                    e == *expect_e);
    }

    SweepSummary summary;
    for (const auto& rep : reports) {
        switch (rep.verdict) {
            case Verdict::Holds: ++summary.holds; break;
            case Verdict::HoldsWithEquality: ++summary.holds_with_equality; break;
            case Verdict::NotApplicable: ++summary.not_applicable; break;
            case Verdict::Violated: ++summary.violated; break;
        }
    }

    auto& doc = out.doc;
    doc["command"] = "verify";
    doc["input"] = text;
    doc["ideal"] = to_json(a);
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& c : cs) cj.push_back(to_json(c));
    doc["c_values"] = cj;
    nlohmann::json rj = nlohmann::json::array();
    for (const auto& rep : reports) rj.push_back(to_json(rep));
    doc["reports"] = rj;
    doc["summary"] = to_json(summary);

    std::ostringstream h;
    h << "ideal: " << format_ideal(a) << "\n";
    for (const auto& rep : reports) h << verdict_line(rep) << "\n";
    h << "summary: " << summary.holds << " holds, " << summary.holds_with_equality
      << " holds with equality, " << summary.not_applicable << " not applicable, "
      << summary.violated << " violated\n";
    out.human = h.str();
    out.code = summary.violated > 0 ? 1 : 0;
    return out;
}

Outcome cmd_radial(const std::string& text, int dim, const Rational& c, int resolution,
                   bool emit_sample, const Limits& limits) {
    Outcome out;
    ParsedIdeal parsed = parse_ideal(text, dim, limits);
    const MonomialIdeal& a = parsed.ideal;
    DualNormalSet dual = dual_normals(a, limits);
    CheckReport rep = check_symmetrized_volume(a, dual, c, resolution);
    Rational exact = complement_volume(a, limits) *
                     rat_pow(c, static_cast<unsigned>(a.dim()));
    double numeric = numeric_complement_volume(dual, c, resolution);

    auto& doc = out.doc;
    doc["command"] = "radial";
    doc["input"] = text;
    doc["ideal"] = to_json(a);
    doc["c"] = to_json(c);
    doc["resolution"] = resolution;
    doc["report"] = to_json(rep);
    doc["exact_complement_volume"] = to_json(exact);
    doc["numeric_complement_volume"] = numeric;
    if (emit_sample) doc["sample"] = to_json(symmetrized_region(dual, c, resolution));

    std::ostringstream h;
    h << "ideal: " << format_ideal(a) << "\n";
    h << "c: " << to_string(c) << ", resolution: " << resolution << "\n";
    h << "exact complement volume: " << to_string(exact) << " (" << to_double(exact) << ")\n";
    h << "numeric complement volume: " << numeric << "\n";
    h << verdict_line(rep) << "\n";
    out.human = h.str();
    out.code = rep.verdict == Verdict::Violated ? 1 : 0;
    return out;
}

Outcome cmd_gadget(int n, std::uint64_t k, const Rational& a_param, std::uint64_t samples,
                   int grid_points, double grid_step, const std::vector<double>& grid) {
    Outcome out;
    ProofGadgetParams params;
    params.n = n;
    params.k = k;
    if (!grid.empty()) {
        params.grid = grid;
    } else {
        double start = static_cast<double>(n) + static_cast<double>(k);
        for (int i = 1; i <= grid_points; ++i) params.grid.push_back(start + grid_step * i);
    }
    CheckReport growth = check_growth_monotonicity(params);
    CheckReport corner = check_corner_volume(n, params.r(), params.q(), a_param, samples);

    auto& doc = out.doc;
    doc["command"] = "gadget";
    doc["n"] = n;
    doc["k"] = static_cast<std::int64_t>(k);
    doc["q"] = static_cast<std::int64_t>(params.q());
    doc["r"] = static_cast<std::int64_t>(params.r());
    nlohmann::json offs = nlohmann::json::array();
    for (const auto& ki : growth_offsets(n, k)) offs.push_back(to_json(ki));
    doc["growth_offsets"] = offs;
    nlohmann::json rj = nlohmann::json::array();
    rj.push_back(to_json(growth));
    rj.push_back(to_json(corner));
    doc["reports"] = rj;

    std::ostringstream h;
    h << "gadget: n=" << n << " k=" << k << " (q=" << params.q() << ", r=" << params.r()
      << ")\n";
    h << "growth offsets:";
    auto offsets = growth_offsets(n, k);
    for (std::size_t i = 0; i < offsets.size(); ++i)
        h << (i ? ", " : " ") << "K_" << (params.r() + 1 + i) << "=" << to_string(offsets[i]);
    h << "\n";
    h << verdict_line(growth) << "\n";
    h << verdict_line(corner) << "\n";
    out.human = h.str();
    out.code =
        (growth.verdict == Verdict::Violated || corner.verdict == Verdict::Violated) ? 1 : 0;
    return out;
}

// Applies the handler to one ideal text, or to every non-empty stdin line when
// the positional is "-". The worst exit code wins.
int run_ideal_command(const std::string& text, bool json_mode, const char* command,
                      const std::function<Outcome(const std::string&)>& handler) {
    if (text != "-") {
        Outcome out = handler(text);
        if (json_mode) {
            out.doc["version"] = tool_version;
            std::cout << emit_json(out.doc);
        } else {
            std::cout << out.human;
        }
        return out.code;
    }

    int worst = 0;
    bool first = true;
    nlohmann::json batch = nlohmann::json::array();
    std::string line;
    while (std::getline(std::cin, line)) {
        std::size_t b = line.find_first_not_of(" \t\r");
        std::size_t e = line.find_last_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::string trimmed = line.substr(b, e - b + 1);
        try {
            Outcome out = handler(trimmed);
            worst = std::max(worst, out.code);
            if (json_mode) {
                batch.push_back(std::move(out.doc));
            } else {
                if (!first) std::cout << "\n";
                std::cout << "--- " << trimmed << "\n" << out.human;
            }
        } catch (const std::exception& err) {
            worst = std::max(worst, error_exit_code(err));
            if (json_mode) {
                batch.push_back(error_entry(trimmed, err));
            } else {
                if (!first) std::cout << "\n";
                std::cout << "--- " << trimmed << "\n";
                print_error(err);
            }
        }
        first = false;
    }
    if (json_mode) {
        nlohmann::json doc;
        doc["version"] = tool_version;
        doc["command"] = command;
        doc["batch"] = batch;
        std::cout << emit_json(doc);
    }
    return worst;
}

std::vector<std::string> split_checks(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& chunk : raw) {
        std::size_t pos = 0;
        while (pos <= chunk.size()) {
            std::size_t comma = chunk.find(',', pos);
            std::string piece = chunk.substr(pos, comma == std::string::npos ? std::string::npos
                                                                             : comma - pos);
            if (!piece.empty()) out.push_back(piece);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of zero-dimensional monomial ideals: colengths, multiplicities,\n"
                 "Newton region duals, multiplier ideals, and the bound-checking harness"};
    app.set_version_flag("--version", tool_version);
    app.require_subcommand(1);

    std::string ideal_text;
    int dim = 0;
    bool json_mode = false;
    std::string c_text;

    auto add_common = [&](CLI::App* sub, bool with_c) {
        sub->add_option("ideal", ideal_text,
                        "ideal like \"(x^2, x*y, y^3)\", or \"-\" to read one per stdin line")
            ->required();
        sub->add_option("--dim", dim, "ambient dimension override (default: inferred)");
        sub->add_flag("--json", json_mode, "emit a canonical JSON document");
        if (with_c) sub->add_option("--c", c_text, "scaling exponent, e.g. 3/2");
    };

    auto* info = app.add_subcommand("info", "print the invariants of an ideal");
    add_common(info, true);

    auto* multiplier = app.add_subcommand("multiplier", "compute a multiplier ideal");
    add_common(multiplier, true);

    auto* verify = app.add_subcommand("verify", "run invariant checks against one ideal");
    std::vector<std::string> verify_c_texts;
    std::vector<std::string> verify_checks_raw;
    std::string expect_lct_text, expect_length_text, expect_e_text;
    add_common(verify, false);
    verify->add_option("--c", verify_c_texts, "scaling exponents to test (default: 1)");
    verify->add_option("--checks", verify_checks_raw,
                       "comma-separated check names (default: the standard set)");
    verify->add_option("--expect-lct", expect_lct_text, "fail unless the lct equals this");
    verify->add_option("--expect-length", expect_length_text,
                       "fail unless the colength equals this");
    verify->add_option("--expect-e", expect_e_text,
                       "fail unless the multiplicity equals this");

    auto* sweep_cmd = app.add_subcommand("sweep", "run checks over seeded random ideals");
    SweepConfig sweep_config;
    std::vector<std::string> sweep_c_texts;
    std::vector<std::string> sweep_checks_raw;
    int sweep_max_exp = 6;
    bool sweep_json = false;
    sweep_cmd->add_option("--n", sweep_config.dimensions, "ambient dimensions (default: 2 3)");
    sweep_cmd->add_option("--count", sweep_config.ideals_per_dimension,
                          "ideals per dimension (default: 200)");
    sweep_cmd->add_option("--seed", sweep_config.seed, "base seed (default: 0)");
    sweep_cmd->add_option("--max-exp", sweep_max_exp,
                          "largest pure-power exponent (default: 6)");
    sweep_cmd->add_option("--c", sweep_c_texts,
                          "scaling exponents (default: 1/2 1 3/2 2)");
    sweep_cmd->add_option("--checks", sweep_checks_raw,
                          "comma-separated check names (default: the standard set)");
    sweep_cmd->add_option("--threads", sweep_config.parallelism, "worker count (default: 1)");
    sweep_cmd->add_flag("--json", sweep_json, "emit the full JSON document");

    auto* radial = app.add_subcommand("radial", "symmetrized-region volume comparison");
    int resolution = 64;
    bool emit_sample = false;
    add_common(radial, true);
    radial->add_option("--resolution", resolution, "angular grid resolution (default: 64)");
    radial->add_flag("--emit-sample", emit_sample, "include the radial sample in JSON output");

    auto* gadget = app.add_subcommand("gadget", "growth and corner-volume proof gadgets");
    int gadget_n = 0;
    std::uint64_t gadget_k = 0;
    std::string gadget_a_text;
    std::uint64_t gadget_samples = 1'000'000;
    int gadget_grid_points = 100;
    double gadget_grid_step = 0.5;
    bool gadget_json = false;
    gadget->add_option("--n", gadget_n, "ambient dimension")->required();
    gadget->add_option("--k", gadget_k, "level")->required();
    gadget->add_option("--a", gadget_a_text,
                       "first-block intercept for the corner volume (default: n+k)");
    gadget->add_option("--samples", gadget_samples,
                       "Monte Carlo samples for the corner volume (default: 1000000)");
    std::vector<double> gadget_grid;
    gadget->add_option("--grid", gadget_grid,
                       "explicit monotonicity grid points (overrides size and spacing)");
    gadget->add_option("--grid-points", gadget_grid_points,
                       "monotonicity grid size (default: 100)");
    gadget->add_option("--grid-step", gadget_grid_step,
                       "monotonicity grid spacing (default: 0.5)");
    gadget->add_flag("--json", gadget_json, "emit a canonical JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Limits limits;
    try {
        if (info->parsed()) {
            std::optional<Rational> c;
            if (!c_text.empty()) c = parse_rational(c_text);
            return run_ideal_command(ideal_text, json_mode, "info", [&](const std::string& t) {
                return cmd_info(t, dim, c, limits);
            });
        }
        if (multiplier->parsed()) {
            Rational c = c_text.empty() ? Rational(1) : parse_rational(c_text);
            return run_ideal_command(ideal_text, json_mode, "multiplier",
                                     [&](const std::string& t) {
                                         return cmd_multiplier(t, dim, c, limits);
                                     });
        }
        if (verify->parsed()) {
            std::vector<Rational> cs;
            for (const auto& t : verify_c_texts) cs.push_back(parse_rational(t));
            if (cs.empty()) cs.push_back(Rational(1));
            for (const auto& c : cs)
                if (c <= 0) throw config_error("scaling exponents must be positive");
            std::vector<std::string> checks = split_checks(verify_checks_raw);
            if (checks.empty()) checks = default_check_names();
            std::optional<Rational> expect_lct;
            std::optional<BigInt> expect_length, expect_e;
            auto parse_big = [](const std::string& t, const char* flag) {
                try {
                    return BigInt(t);
                } catch (const std::exception&) {
                    throw config_error(std::string(flag) + " expects an integer, got: " + t);
                }
            };
            if (!expect_lct_text.empty()) expect_lct = parse_rational(expect_lct_text);
            if (!expect_length_text.empty())
                expect_length = parse_big(expect_length_text, "--expect-length");
            if (!expect_e_text.empty()) expect_e = parse_big(expect_e_text, "--expect-e");
            return run_ideal_command(ideal_text, json_mode, "verify", [&](const std::string& t) {
                return cmd_verify(t, dim, cs, checks, expect_lct, expect_length, expect_e,
                                  limits);
            });
        }
        if (sweep_cmd->parsed()) {
            if (!sweep_c_texts.empty()) {
                sweep_config.c_values.clear();
                for (const auto& t : sweep_c_texts)
                    sweep_config.c_values.push_back(parse_rational(t));
            }
            if (!split_checks(sweep_checks_raw).empty())
                sweep_config.checks = split_checks(sweep_checks_raw);
            if (sweep_max_exp < 2) throw config_error("sweep: max exponent must be at least 2");
            sweep_config.max_exponent = static_cast<Exponent>(sweep_max_exp);
            SweepResult result = sweep(sweep_config);
            if (sweep_json) {
                std::cout << emit_json(sweep_document(sweep_config, result));
            } else {
                std::cout << "cases: " << result.cases.size()
                          << ", skipped: " << result.skips.size() << "\n";
                for (const auto& sc : result.cases)
                    for (const auto& rep : sc.reports)
                        if (rep.verdict == Verdict::Violated)
                            std::cout << "VIOLATED " << sc.case_id << " " << verdict_line(rep)
                                      << "\n";
                std::cout << "verdicts: " << result.summary.holds << " holds, "
                          << result.summary.holds_with_equality << " holds with equality, "
                          << result.summary.not_applicable << " not applicable, "
                          << result.summary.violated << " violated\n";
            }
            return result.any_violation() ? 1 : 0;
        }
        if (radial->parsed()) {
            Rational c = c_text.empty() ? Rational(1) : parse_rational(c_text);
            return run_ideal_command(ideal_text, json_mode, "radial", [&](const std::string& t) {
                return cmd_radial(t, dim, c, resolution, emit_sample, limits);
            });
        }
        if (gadget->parsed()) {
            if (gadget_n < 1) throw config_error("gadget: n must be positive");
            Rational a_param = gadget_a_text.empty()
                                   ? Rational(static_cast<long>(gadget_n) +
                                              static_cast<long>(gadget_k))
                                   : parse_rational(gadget_a_text);
            if (gadget_grid_points < 1 || !(gadget_grid_step > 0))
                throw config_error("gadget: grid must have positive size and spacing");
            Outcome out = cmd_gadget(gadget_n, gadget_k, a_param, gadget_samples,
                                     gadget_grid_points, gadget_grid_step, gadget_grid);
            if (gadget_json) {
                out.doc["version"] = tool_version;
                std::cout << emit_json(out.doc);
            } else {
                std::cout << out.human;
            }
            return out.code;
        }
    } catch (const std::exception& e) {
        print_error(e);
        return error_exit_code(e);
    }
    return 0;
}
