#include <catch2/catch_amalgamated.hpp>

#include <staircase/staircase.hpp>

#include <cmath>
#include <vector>

using namespace staircase;
using Catch::Approx;

namespace {

MonomialIdeal ideal(const char* text, int dim = 0) { return parse_ideal(text, dim).ideal; }

double quantity_double(const CheckReport& rep, const char* name) {
    for (const auto& [key, value] : rep.quantities)
        if (key == name) return std::get<double>(value);
    FAIL("missing quantity " << name);
    return 0.0;
}

} // namespace

TEST_CASE("boundary radius on hand-checked directions") {
    double quarter = std::atan(1.0);
    CHECK(boundary_radius(MonomialIdeal::maximal(2), 1, {0, 1}, {quarter}) ==
          Approx(1.0 / std::sqrt(2.0)));
    CHECK(boundary_radius(ideal("(x^2, x*y, y^3)"), 1, {0, 1}, {quarter}) ==
          Approx(std::sqrt(2.0)));
    CHECK(boundary_radius(ideal("(x^2, x*y, y^3)"), 2, {0, 1}, {quarter}) ==
          Approx(2.0 * std::sqrt(2.0)));
    // the swapped copy of an asymmetric region has the swapped radius profile
    double th = 0.3;
    auto a = ideal("(x^4, y^2)");
    CHECK(boundary_radius(a, 1, {1, 0}, {th}) ==
          Approx(boundary_radius(ideal("(x^2, y^4)"), 1, {0, 1}, {th})));
}

TEST_CASE("boundary radius rejects degenerate input") {
    auto a = MonomialIdeal::maximal(2);
    CHECK_THROWS_AS(boundary_radius(a, 1, {0, 1}, {0.0}), unsupported_input_error);
    CHECK_THROWS_AS(boundary_radius(a, 1, {0, 1, 2}, {0.4}), dimension_mismatch_error);
    CHECK_THROWS_AS(boundary_radius(a, 1, {0, 1}, {0.4, 0.4}), dimension_mismatch_error);
    CHECK_THROWS_AS(boundary_radius(MonomialIdeal::maximal(4), 1, {0, 1, 2, 3}, {0.4, 0.4, 0.4}),
                    unsupported_input_error);
}

TEST_CASE("radial samples have the advertised shape") {
    auto s2 = symmetrized_region(ideal("(x^2, x*y, y^3)"), 1, 32);
    CHECK(s2.n == 2);
    CHECK(s2.resolution == 32);
    REQUIRE(s2.grid.size() == 32);
    CHECK(s2.radii.size() == 32);
    for (std::size_t i = 1; i < s2.grid.size(); ++i) CHECK(s2.grid[i] > s2.grid[i - 1]);
    CHECK(s2.grid.front() > 0.0);
    CHECK(s2.grid.back() < 2.0 * std::atan(1.0));
    for (double r : s2.radii) CHECK(r > 0.0);

    auto s3 = symmetrized_region(ideal("(x^2, y^3, z^4)"), Rational(3, 2), 16);
    CHECK(s3.n == 3);
    CHECK(s3.radii.size() == 256);

    CHECK_THROWS_AS(symmetrized_region(MonomialIdeal::maximal(2), 1, 7), config_error);
    CHECK_THROWS_AS(symmetrized_region(MonomialIdeal::maximal(4), 1, 32),
                    unsupported_input_error);
}

TEST_CASE("numeric volume converges to the exact complement volume") {
    SeededRng rng(81);
    for (int trial = 0; trial < 6; ++trial) {
        auto a = random_ideal(2, rng, 6);
        for (Rational c : {Rational(1), Rational(3, 2)}) {
            double exact = to_double(complement_volume(a) * rat_pow(c, 2));
            double numeric = numeric_complement_volume(dual_normals(a), c, 256);
            CHECK(std::abs(numeric - exact) <= 0.01 * exact);
        }
    }
    for (int trial = 0; trial < 3; ++trial) {
        auto a = random_ideal(3, rng, 5);
        double exact = to_double(complement_volume(a));
        double numeric = numeric_complement_volume(dual_normals(a), 1, 48);
        CHECK(std::abs(numeric - exact) <= 0.02 * exact);
    }
}

TEST_CASE("symmetrized sample of a symmetric region reproduces its volume") {
    auto m3 = MonomialIdeal::maximal_power(2, 3);
    auto s = symmetrized_region(m3, 1, 256);
    CHECK(complement_volume_numeric(s) == Approx(to_double(complement_volume(m3))).epsilon(1e-3));
}

TEST_CASE("volume comparison holds on random regions") {
    SeededRng rng(82);
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_ideal(2, rng, 6);
        auto rep = check_symmetrized_volume(a, 1, 128);
        CHECK((rep.verdict == Verdict::Holds || rep.verdict == Verdict::HoldsWithEquality));
        CHECK(quantity_double(rep, "complement_volume_symmetrized") <=
              quantity_double(rep, "complement_volume_original") * (1.0 + 1e-6));
    }
    for (int trial = 0; trial < 3; ++trial) {
        auto a = random_ideal(3, rng, 4);
        auto rep = check_symmetrized_volume(a, Rational(3, 2), 24);
        CHECK((rep.verdict == Verdict::Holds || rep.verdict == Verdict::HoldsWithEquality));
    }
}

TEST_CASE("volume comparison is an exact tie on symmetric input") {
    for (Exponent d : {1, 2, 3}) {
        auto rep = check_symmetrized_volume(MonomialIdeal::maximal_power(2, d), 1, 64);
        CHECK(rep.verdict == Verdict::HoldsWithEquality);
    }
    auto rep3 = check_symmetrized_volume(MonomialIdeal::maximal_power(3, 2), 1, 16);
    CHECK(rep3.verdict == Verdict::HoldsWithEquality);
    auto asym = check_symmetrized_volume(ideal("(x^5, y^2)"), 1, 64);
    CHECK(asym.verdict == Verdict::Holds);
}

TEST_CASE("power mean slack is non-negative and vanishes only on ties") {
    CHECK(power_mean_gap(3, {Rational(7, 3), Rational(7, 3), Rational(7, 3)}) == 0);
    CHECK(power_mean_gap(2, {Rational(1), Rational(2)}) > 0);
    CHECK(power_mean_gap(1, {Rational(5), Rational(9)}) == 0);
    CHECK_THROWS_AS(power_mean_gap(2, {}), unsupported_input_error);
    CHECK_THROWS_AS(power_mean_gap(2, {Rational(-1)}), unsupported_input_error);
    CHECK_THROWS_AS(power_mean_gap(0, {Rational(1)}), unsupported_input_error);

    SeededRng rng(83);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.below(4));
        int count = 1 + static_cast<int>(rng.below(6));
        std::vector<Rational> values;
        bool all_equal = true;
        for (int i = 0; i < count; ++i) {
            values.push_back(Rational(1 + rng.below(40), 1 + rng.below(12)));
            all_equal = all_equal && values.back() == values.front();
        }
        Rational gap = power_mean_gap(n, values);
        CHECK(gap >= 0);
        CHECK(power_mean_holds(n, values));
        if (n > 1) CHECK((gap == 0) == all_equal);
    }
}

TEST_CASE("balanced level vectors enumerate the middle layer") {
    auto v0 = balanced_level_vectors(2, 0);
    CHECK(v0 == std::vector<ExponentVector>{{1, 1}});
    auto v1 = balanced_level_vectors(3, 4);
    CHECK(v1.size() == 3);
    for (const auto& u : v1) CHECK(one_norm(u) == 7);
    bool saw = false;
    for (const auto& u : v1) saw = saw || u == ExponentVector{3, 2, 2};
    CHECK(saw);
    for (int n = 2; n <= 4; ++n)
        for (std::uint64_t k = 0; k <= 5; ++k) {
            auto vs = balanced_level_vectors(n, k);
            CHECK(BigInt(vs.size()) ==
                  binomial(static_cast<unsigned>(n), static_cast<unsigned>(k % n)));
            for (const auto& u : vs) CHECK(one_norm(u) == static_cast<std::uint64_t>(n) + k);
        }
}

TEST_CASE("no balanced point is interior at its own level") {
    SeededRng rng(84);
    for (int n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_ideal(n, rng, 6);
            for (Rational c : {Rational(1), Rational(3, 2)}) {
                auto rep = check_balanced_exclusion(a, c);
                CHECK(rep.verdict != Verdict::Violated);
            }
        }
    CHECK(check_balanced_exclusion(MonomialIdeal::maximal_power(2, 4), Rational(1, 8)).verdict ==
          Verdict::NotApplicable);
    CHECK(check_balanced_exclusion(MonomialIdeal::maximal(5), dual_of(MonomialIdeal::maximal(5)),
                                   Rational(2)).verdict == Verdict::NotApplicable);
}

TEST_CASE("corner volume closed form against Monte Carlo") {
    auto rep = check_corner_volume(3, 1, 0, 4, 200'000);
    CHECK(rep.verdict == Verdict::Holds);
    bool saw = false;
    for (const auto& [name, value] : rep.quantities)
        if (name == "diagonal_crossing") {
            saw = true;
            CHECK(std::get<Rational>(value) == Rational(4, 3));
        }
    CHECK(saw);
    CHECK(check_corner_volume(2, 1, 1, 9, 200'000).verdict == Verdict::Holds);
    CHECK_THROWS_AS(check_corner_volume(5, 1, 0, 9), unsupported_input_error);
    CHECK_THROWS_AS(check_corner_volume(3, 3, 0, 9), unsupported_input_error);
    CHECK_THROWS_AS(check_corner_volume(3, 1, 0, 2), unsupported_input_error);
}

TEST_CASE("growth offsets on worked examples") {
    CHECK(growth_offsets(3, 1) == std::vector<Rational>{Rational(0), Rational(-1)});
    CHECK(growth_offsets(2, 1) == std::vector<Rational>{Rational(-1)});
    for (int n = 2; n <= 4; ++n)
        for (std::uint64_t k = 1; k <= 6; ++k) {
            if (k % n == 0) continue;
            auto offs = growth_offsets(n, k);
            CHECK(offs.back() == -Rational(static_cast<long>(k % n)));
            for (std::size_t i = 0; i + 1 < offs.size(); ++i) CHECK(offs[i] > offs[i + 1]);
        }
}

TEST_CASE("growth function increases strictly above the threshold") {
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t k = 0; k <= 6; ++k) {
            ProofGadgetParams params;
            params.n = n;
            params.k = k;
            double start = static_cast<double>(n + k) + 0.5;
            for (int i = 0; i < 100; ++i) params.grid.push_back(start + 0.5 * i);
            auto rep = check_growth_monotonicity(params);
            if (k % static_cast<std::uint64_t>(n) == 0)
                CHECK(rep.verdict == Verdict::NotApplicable);
            else
                CHECK(rep.verdict == Verdict::Holds);
        }
}

TEST_CASE("growth grid handling") {
    ProofGadgetParams params;
    params.n = 2;
    params.k = 1;
    params.grid = {1.0, 2.0, 3.0, 4.0, 5.0};
    auto rep = check_growth_monotonicity(params);
    CHECK(rep.verdict == Verdict::Holds);
    bool saw = false;
    for (const auto& [name, value] : rep.quantities)
        if (name == "grid_points_skipped_at_or_below_threshold") {
            saw = true;
            CHECK(std::get<std::int64_t>(value) == 3);
        }
    CHECK(saw);

    params.grid = {10.0};
    CHECK(check_growth_monotonicity(params).verdict == Verdict::NotApplicable);

    params.grid = {10.0, 9.0};
    CHECK_THROWS_AS(check_growth_monotonicity(params), config_error);
}
