#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <staircase/monomial_ideal.hpp>
#include <staircase/newton.hpp>
#include <staircase/rational.hpp>
#include <staircase/rng.hpp>

// Test oracles computed independently of the library's geometry kernel.
// Membership in the Newton polytope is decided by an exact phase-1 simplex
// (Bland's rule) over the convex-combination formulation, not by facet
// normals; the interior test reduces to membership of a point nudged toward
// the origin by an exactly-safe rational step. The Monte Carlo volume
// estimator stratifies over unit lattice cells classified by these oracles,
// sampling only the cells the boundary actually crosses.

namespace oracles {

using staircase::BigInt;
using staircase::Exponent;
using staircase::ExponentVector;
using staircase::MonomialIdeal;
using staircase::Rational;

// Feasibility of { lambda >= 0 : sum lambda_j = 1, sum lambda_j g_j <= x }:
// phase-1 simplex over lambda, slacks, and one artificial per row, exact
// rational pivots, Bland's rule for termination.
inline bool in_newton_polytope(const std::vector<ExponentVector>& gens,
                               const std::vector<Rational>& x) {
    const std::size_t m = gens.size();
    const std::size_t n = x.size();
    for (const auto& xi : x)
        if (xi < 0) return false;

    const std::size_t rows = n + 1;
    const std::size_t structural = m + n;           // lambdas then slacks
    const std::size_t cols = structural + rows + 1;  // + artificials + rhs
    std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) tab[i][j] = Rational(gens[j][i]);
        tab[i][m + i] = 1;                 // slack
        tab[i][structural + i] = 1;        // artificial
        tab[i][cols - 1] = x[i];
    }
    for (std::size_t j = 0; j < m; ++j) tab[n][j] = 1;
    tab[n][structural + n] = 1;
    tab[n][cols - 1] = 1;

    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = structural + i;

    // objective row: minimize the artificial sum; reduced costs for the
    // initial basis are -(column sums over rows), objective value -(rhs sum)
    std::vector<Rational> obj(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < rows; ++i) s += tab[i][j];
        if (j < structural)
            obj[j] = -s;
        else if (j < cols - 1)
            obj[j] = Rational(1) - s;
        else
            obj[j] = -s;
    }

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j)
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = rows;
        Rational best_ratio = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = tab[i][cols - 1] / tab[i][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == rows) break;  // unbounded cannot happen here; be safe
        Rational pivot = tab[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) tab[leave][j] /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave) continue;
            Rational f = tab[i][enter];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        Rational f = obj[enter];
        if (f != 0)
            for (std::size_t j = 0; j < cols; ++j) obj[j] -= f * tab[leave][j];
        basis[leave] = enter;
    }
    return obj[cols - 1] == 0;  // objective value is -(artificial sum)
}

inline bool in_newton_polytope(const MonomialIdeal& a, const std::vector<Rational>& x) {
    return in_newton_polytope(a.generators(), x);
}

inline std::vector<Rational> to_rational_point(const ExponentVector& u) {
    std::vector<Rational> x(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) x[i] = Rational(u[i]);
    return x;
}

// Exactly safe inward nudge: any facet inequality v.y >= 1 of P has v with a
// common denominator at most n! E^n (an integer matrix determinant), so a
// lattice point u with v.(u/c) > 1 clears it by at least 1/(D num(c)); moving
// every coordinate down by delta changes v.(y/c) by at most n delta den(c) /
// num(c). delta below num(c)/(2 n D den(c) num(c)) keeps strict points inside.
inline bool interior_of_scaled_polytope(const MonomialIdeal& a, const ExponentVector& u,
                                        const Rational& c) {
    const int n = a.dim();
    BigInt e_max = 1;
    for (const auto& g : a.generators())
        for (Exponent x : g) e_max = std::max(e_max, BigInt(x));
    BigInt d = staircase::factorial(static_cast<unsigned>(n)) *
               staircase::int_pow(e_max, static_cast<unsigned>(n));
    Rational delta(BigInt(1), BigInt(2) * n * d * staircase::den(c) * staircase::num(c) *
                                  staircase::den(c));
    std::vector<Rational> x(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        Rational xi = Rational(u[i]) - delta;
        if (xi < 0) return false;
        x[i] = xi / c;
    }
    return in_newton_polytope(a, x);
}

// Stratified Monte Carlo estimate of the volume of the orthant complement of
// the Newton polytope. Unit lattice cells are classified exactly: a cell lies
// in the complement iff its lower corner does, and entirely so iff its upper
// corner is not interior. Only boundary-crossing cells are sampled, using the
// facet normals in double precision.
inline double mc_complement_volume(const MonomialIdeal& a, const staircase::DualNormalSet& dual,
                                   std::uint64_t samples, std::uint64_t seed) {
    const int n = a.dim();
    ExponentVector box = staircase::pure_power_exponents(a);
    std::vector<std::vector<double>> normals;
    for (const auto& v : dual.normals) {
        std::vector<double> row(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) row[i] = staircase::to_double(v[i]);
        normals.push_back(std::move(row));
    }

    double full = 0.0;
    std::vector<ExponentVector> partial;
    ExponentVector u(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool dominated = false;
        for (const auto& g : a.generators())
            if (staircase::divides(g, u)) {
                dominated = true;
                break;
            }
        if (!dominated && !in_newton_polytope(a, to_rational_point(u))) {
            ExponentVector top = u;
            for (auto& t : top) ++t;
            if (interior_of_scaled_polytope(a, top, Rational(1)))
                partial.push_back(u);
            else
                full += 1.0;
        }
        int axis = 0;
        while (axis < n) {
            if (++u[static_cast<std::size_t>(axis)] < box[static_cast<std::size_t>(axis)]) break;
            u[static_cast<std::size_t>(axis)] = 0;
            ++axis;
        }
        if (axis == n) break;
    }

    if (partial.empty()) return full;
    staircase::SeededRng rng(seed);
    const std::uint64_t per_cell = std::max<std::uint64_t>(1, samples / partial.size());
    double estimate = full;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (const auto& cell : partial) {
        std::uint64_t outside = 0;
        for (std::uint64_t s = 0; s < per_cell; ++s) {
            for (int i = 0; i < n; ++i)
                x[static_cast<std::size_t>(i)] =
                    static_cast<double>(cell[static_cast<std::size_t>(i)]) + rng.unit_double();
            bool in = true;
            for (const auto& v : normals) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i)
                    dot += v[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
                if (dot < 1.0) {
                    in = false;
                    break;
                }
            }
            if (!in) ++outside;
        }
        estimate += static_cast<double>(outside) / static_cast<double>(per_cell);
    }
    return estimate;
}

} // namespace oracles
