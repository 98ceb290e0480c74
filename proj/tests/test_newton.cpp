#include <catch2/catch_amalgamated.hpp>

#include <staircase/staircase.hpp>

#include "oracles.hpp"

#include <vector>

using namespace staircase;

namespace {

MonomialIdeal ideal(const char* text, int dim = 0) { return parse_ideal(text, dim).ideal; }

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

// Every lattice point of the bounding box plus a one-cell margin.
template <typename F>
void for_each_margin_point(const MonomialIdeal& a, F&& f) {
    ExponentVector dims = pure_power_exponents(a);
    for (auto& d : dims) d += 2;
    detail::for_each_box_point(dims, f);
}

} // namespace

TEST_CASE("facet normals on worked examples") {
    CHECK(dual_normals(ideal("(x^2, x*y, y^3)")).normals ==
          std::vector<RationalVector>{rv({Rational(1, 2), Rational(1, 2)}),
                                      rv({Rational(2, 3), Rational(1, 3)})});
    CHECK(dual_normals(ideal("(x^2, y^3)")).normals ==
          std::vector<RationalVector>{rv({Rational(1, 2), Rational(1, 3)})});
    CHECK(dual_normals(ideal("(x^5, y^4, z^2)")).normals ==
          std::vector<RationalVector>{rv({Rational(1, 5), Rational(1, 4), Rational(1, 2)})});
    for (int n = 2; n <= 4; ++n)
        for (Exponent d = 1; d <= 3; ++d)
            CHECK(dual_normals(MonomialIdeal::maximal_power(n, d)).normals ==
                  std::vector<RationalVector>{RationalVector(n, Rational(1, d))});
}

TEST_CASE("dual of the unit ideal is empty, others reject bad input") {
    CHECK(dual_of(MonomialIdeal::unit(2)).normals.empty());
    CHECK_THROWS_AS(dual_normals(MonomialIdeal::unit(2)), unsupported_input_error);
    CHECK_THROWS_AS(dual_normals(ideal("(x^2, x*y)")), unsupported_input_error);
}

TEST_CASE("normal coordinates obey the pure-power bracket") {
    SeededRng rng(71);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_ideal(n, rng, 6);
            auto p = pure_power_exponents(a);
            for (const auto& v : dual_normals(a).normals)
                for (int i = 0; i < n; ++i) {
                    CHECK(v[i] >= Rational(1, p[i]));
                    CHECK(v[i] <= 1);
                }
        }
}

TEST_CASE("classification agrees with the simplex membership oracle") {
    SeededRng rng(72);
    for (int n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 12; ++trial) {
            auto a = random_ideal(n, rng, 5);
            auto dual = dual_normals(a);
            for (Rational c : {Rational(1), Rational(3, 2)}) {
                for_each_margin_point(a, [&](const ExponentVector& u) {
                    RationalVector x(u.size());
                    std::vector<Rational> scaled(u.size());
                    for (std::size_t i = 0; i < u.size(); ++i) {
                        x[i] = Rational(u[i]);
                        scaled[i] = Rational(u[i]) / c;
                    }
                    RegionClass cls = classify(dual, x, c);
                    bool member = oracles::in_newton_polytope(a, scaled);
                    bool interior = oracles::interior_of_scaled_polytope(a, u, c);
                    CHECK((cls != RegionClass::Outside) == member);
                    CHECK((cls == RegionClass::Interior) == interior);
                });
            }
        }
}

TEST_CASE("log canonical threshold on worked examples") {
    CHECK(lct(ideal("(x^2, x*y, y^3)")) == 1);
    CHECK(lct(ideal("(x^2, y^3)")) == Rational(5, 6));
    CHECK(lct(ideal("(x^5, y^4, z^2)")) == Rational(19, 20));
    for (int n = 1; n <= 4; ++n)
        for (Exponent d = 1; d <= 4; ++d)
            CHECK(lct(MonomialIdeal::maximal_power(n, d)) == Rational(n, d));
}

TEST_CASE("threshold scales inversely under ideal powers") {
    SeededRng rng(73);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng.below(2));
        auto a = random_ideal(n, rng, 5);
        CHECK(lct(power(a, 2)) == lct(a) / 2);
        Rational sum = 0;
        for (Exponent p : pure_power_exponents(a)) sum += Rational(1, p);
        CHECK(lct(a) >= sum);
        CHECK(lct(a) <= n);
    }
}

TEST_CASE("complement volume on worked examples") {
    CHECK(complement_volume(ideal("(x^2, x*y, y^3)")) == Rational(5, 2));
    CHECK(complement_volume(ideal("(x^5, y^4, z^2)")) == Rational(20, 3));
    CHECK(complement_volume(ideal("(x^3)", 1)) == 3);
    for (int n = 1; n <= 4; ++n)
        for (Exponent d = 1; d <= 3; ++d)
            CHECK(complement_volume(MonomialIdeal::maximal_power(n, d)) ==
                  Rational(int_pow(BigInt(d), static_cast<unsigned>(n)),
                           factorial(static_cast<unsigned>(n))));
}

TEST_CASE("complement volume of pure power ideals is the simplex volume") {
    SeededRng rng(74);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + static_cast<int>(rng.below(4));
        std::vector<ExponentVector> gens;
        BigInt prod = 1;
        for (int i = 0; i < n; ++i) {
            Exponent p = static_cast<Exponent>(1 + rng.below(9));
            ExponentVector g(n, 0);
            g[i] = p;
            gens.push_back(g);
            prod *= p;
        }
        auto a = MonomialIdeal::from_generators(n, gens);
        CHECK(complement_volume(a) == Rational(prod, factorial(static_cast<unsigned>(n))));
    }
}

TEST_CASE("complement volume scales like the n-th power under dilation") {
    SeededRng rng(75);
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            auto a = random_ideal(n, rng, 5);
            Rational vol = complement_volume(a);
            for (unsigned r : {2u, 3u})
                CHECK(complement_volume(power(a, r)) ==
                      vol * rat_pow(Rational(r), static_cast<unsigned>(n)));
        }
}

TEST_CASE("colength dominates complement volume") {
    SeededRng rng(76);
    for (int trial = 0; trial < 10; ++trial) {
        auto a1 = random_ideal(1, rng, 6);
        CHECK(Rational(colength(a1)) == complement_volume(a1));
    }
    for (int n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            auto a = random_ideal(n, rng, 6);
            CHECK(Rational(colength(a)) > complement_volume(a));
            CHECK(Rational(colength(integral_closure(a))) >= complement_volume(a));
        }
}

TEST_CASE("multiplicity on worked examples") {
    CHECK(multiplicity(ideal("(x^2, x*y, y^3)")) == 5);
    CHECK(multiplicity(ideal("(x^5, y^4, z^2)")) == 40);
    for (int n = 1; n <= 4; ++n)
        for (Exponent d = 1; d <= 3; ++d)
            CHECK(multiplicity(MonomialIdeal::maximal_power(n, d)) ==
                  int_pow(BigInt(d), static_cast<unsigned>(n)));
    CHECK(scaled_multiplicity(ideal("(x^2, x*y, y^3)"), Rational(3, 2)) == Rational(45, 4));
}

TEST_CASE("integral closure on worked examples") {
    auto c1 = integral_closure(ideal("(x^2, y^2)"));
    CHECK(c1 == ideal("(x^2, x*y, y^2)"));
    auto a2 = ideal("(x^2, x*y, y^3)");
    CHECK(integral_closure(a2) == a2);
    for (int n = 2; n <= 3; ++n)
        for (Exponent d = 1; d <= 3; ++d) {
            auto md = MonomialIdeal::maximal_power(n, d);
            CHECK(integral_closure(md) == md);
        }
}

TEST_CASE("integral closure matches the membership oracle pointwise") {
    SeededRng rng(77);
    for (int n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_ideal(n, rng, 5);
            auto closure = integral_closure(a);
            CHECK(integral_closure(closure) == closure);
            CHECK(multiplicity(closure) == multiplicity(a));
            CHECK(complement_volume(closure) == complement_volume(a));
            CHECK(colength(closure) <= colength(a));
            for (const auto& g : a.generators()) CHECK(contains(closure, g));
            for_each_margin_point(a, [&](const ExponentVector& u) {
                CHECK(contains(closure, u) ==
                      oracles::in_newton_polytope(a, oracles::to_rational_point(u)));
            });
        }
}

TEST_CASE("product duals pick up facets absent from both factors") {
    // P((x^2,y,z^3)) + 2 P(m) has a facet spanned by an edge of each summand;
    // its normal (1,2,1)/4 is proportional to no facet normal of either factor.
    auto a = ideal("(x^2, y, z^3)");
    auto mn = MonomialIdeal::maximal_power(3, 2);
    auto dual = dual_of(product(a, mn));
    RationalVector cross = rv({Rational(1, 4), Rational(1, 2), Rational(1, 4)});
    bool found = false;
    for (const auto& v : dual.normals) found = found || v == cross;
    CHECK(found);
    for (const auto& v : dual_of(a).normals) CHECK(v != cross);
}

TEST_CASE("stratified Monte Carlo volume stays within one percent") {
    SeededRng rng(78);
    for (int n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            auto a = random_ideal(n, rng, 6);
            auto dual = dual_normals(a);
            double exact = to_double(complement_volume(a));
            double est = oracles::mc_complement_volume(a, dual, 200'000, 99 + trial);
            CHECK(std::abs(est - exact) <= 0.01 * exact);
        }
}
