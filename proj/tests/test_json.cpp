#include <catch2/catch_amalgamated.hpp>

#include <staircase/staircase.hpp>

#include <string>

using namespace staircase;

namespace {

MonomialIdeal ideal(const char* text, int dim = 0) { return parse_ideal(text, dim).ideal; }

} // namespace

TEST_CASE("rationals encode as decimal num/den strings") {
    auto j = to_json(Rational(-19, 20));
    CHECK(j.at("num").get<std::string>() == "-19");
    CHECK(j.at("den").get<std::string>() == "20");
    CHECK(rational_from_json(j) == Rational(-19, 20));

    Rational huge = rat_pow(Rational(10), 30) + Rational(1, 3);
    CHECK(rational_from_json(to_json(huge)) == huge);

    CHECK_THROWS_AS(rational_from_json(nlohmann::json{{"num", "1"}, {"den", "0"}}), parse_error);
}

TEST_CASE("ideals round-trip through JSON") {
    auto a = ideal("(x^2, x*y, y^3)");
    auto j = to_json(a);
    CHECK(j.at("dim") == 2);
    CHECK(j.at("text") == "(x^2, x*y, y^3)");
    CHECK(j.at("generators") == nlohmann::json::parse("[[2,0],[1,1],[0,3]]"));
    CHECK(ideal_from_json(j) == a);

    SeededRng rng(101);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            auto b = random_ideal(n, rng, 6);
            CHECK(ideal_from_json(to_json(b)) == b);
        }
}

TEST_CASE("quantity values keep their type") {
    CHECK(to_json(QuantityValue(std::int64_t(40))) == nlohmann::json(40));
    CHECK(to_json(QuantityValue(true)) == nlohmann::json(true));
    CHECK(to_json(QuantityValue(std::string("n2/i0"))) == nlohmann::json("n2/i0"));
    CHECK(to_json(QuantityValue(Rational(5, 2))).at("num") == "5");
    CHECK(to_json(QuantityValue(0.25)) == nlohmann::json(0.25));
}

TEST_CASE("check reports serialize verdict, quantities, and witness") {
    auto rep = check_multiplicity_bound(MonomialIdeal::maximal_power(2, 3), 1);
    auto j = to_json(rep);
    CHECK(j.at("check") == "multiplicity_bound");
    CHECK(j.at("verdict") == "HoldsWithEquality");
    CHECK(j.at("ideal").at("dim") == 2);
    CHECK(j.at("c") == to_json(Rational(1)));
    CHECK(j.at("quantities").is_object());
    CHECK_FALSE(j.contains("witness"));

    CheckReport bad;
    bad.check = "demo";
    bad.conclude(Verdict::Violated, "witness text");
    auto jb = to_json(bad);
    CHECK(jb.at("verdict") == "VIOLATED");
    CHECK(jb.at("witness") == "witness text");
    CHECK_FALSE(jb.contains("ideal"));
    CHECK_FALSE(jb.contains("c"));
}

TEST_CASE("dual normal sets and radial samples serialize") {
    auto dj = to_json(dual_normals(ideal("(x^2, x*y, y^3)")));
    CHECK(dj.at("dim") == 2);
    CHECK(dj.at("normals").size() == 2);
    CHECK(dj.at("normals")[0][0] == to_json(Rational(1, 2)));

    auto sj = to_json(symmetrized_region(MonomialIdeal::maximal(2), 1, 8));
    CHECK(sj.at("n") == 2);
    CHECK(sj.at("resolution") == 8);
    CHECK(sj.at("grid").size() == 8);
    CHECK(sj.at("radii").size() == 8);
}

TEST_CASE("sweep documents carry config, cases, skips, and summary") {
    SweepConfig config;
    config.dimensions = {2};
    config.ideals_per_dimension = 3;
    config.seed = 17;
    auto result = sweep(config);
    auto doc = sweep_document(config, result);
    CHECK(doc.at("version") == tool_version);
    CHECK(doc.at("command") == "sweep");
    CHECK(doc.at("config").at("seed") == 17);
    CHECK(doc.at("config").at("c_values").size() == 4);
    CHECK(doc.at("cases").size() == 3);
    CHECK(doc.at("cases")[0].at("case") == "n2/i0");
    CHECK(doc.at("skips").is_array());
    auto sum = doc.at("summary");
    CHECK(sum.at("holds").get<std::int64_t>() + sum.at("holds_with_equality").get<std::int64_t>() +
              sum.at("not_applicable").get<std::int64_t>() +
              sum.at("violated").get<std::int64_t>() ==
          static_cast<std::int64_t>(doc.at("cases")[0].at("reports").size() +
                                    doc.at("cases")[1].at("reports").size() +
                                    doc.at("cases")[2].at("reports").size()));
}

TEST_CASE("emitted documents are byte-deterministic with sorted keys") {
    SweepConfig config;
    config.dimensions = {2};
    config.ideals_per_dimension = 4;
    config.seed = 23;
    std::string first = emit_json(sweep_document(config, sweep(config)));
    std::string second = emit_json(sweep_document(config, sweep(config)));
    CHECK(first == second);
    CHECK(first.back() == '\n');
    CHECK(first.find("\"version\"") != std::string::npos);
    // keys of a case object appear in sorted order
    CHECK(first.find("\"case\"") < first.find("\"ideal\""));
    CHECK(first.find("\"command\"") < first.find("\"config\""));
}
