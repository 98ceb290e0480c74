#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "multiplier.hpp"
#include "newton.hpp"
#include "report.hpp"
#include "rng.hpp"

// Numeric laboratory for the symmetrization machinery behind the multiplicity
// bound: radial boundary functions, the permutation-averaged region, its
// volume comparison and sampled convexity, plus the exact combinatorial
// gadgets (balanced-point exclusion, power-mean inequality, corner-simplex
// volume, growth monotonicity). This header is the only part of the library
// that computes in floating point; every numeric verdict carries an explicit
// tolerance and any sampling uses a fixed recorded seed.

namespace staircase {

// Boundary radii of a permutation-symmetrized scaled Newton region on a
// midpoint angular grid over the open positive orthant of directions.
struct RadialSample {
    int n = 0;                  // ambient dimension, 2 or 3
    int resolution = 0;         // grid points per angle
    std::vector<double> grid;   // midpoint angles in (0, pi/2), strictly increasing
    std::vector<double> radii;  // size resolution^(n-1), row-major in the angle indices
};

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<std::vector<double>> normals_as_doubles(const DualNormalSet& dual) {
    std::vector<std::vector<double>> out;
    out.reserve(dual.normals.size());
    for (const auto& v : dual.normals) {
        std::vector<double> row(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) row[i] = to_double(v[i]);
        out.push_back(std::move(row));
    }
    return out;
}

// Unit direction from angles: n=2 uses (cos t0, sin t0); n=3 uses elevation
// form (cos t1 cos t0, cos t1 sin t0, sin t1), matching the volume element
// rho^{n-1} * prod_i (cos t_i)^{i-1}.
inline std::vector<double> direction_from_angles(int n, const std::vector<double>& theta) {
    if (n == 2) return {std::cos(theta[0]), std::sin(theta[0])};
    return {std::cos(theta[1]) * std::cos(theta[0]), std::cos(theta[1]) * std::sin(theta[0]),
            std::sin(theta[1])};
}

inline double radius_for_permutation(const std::vector<std::vector<double>>& normals, double c,
                                     const std::vector<int>& sigma,
                                     const std::vector<double>& dir) {
    double r = 0.0;
    for (const auto& v : normals) {
        double s = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * dir[sigma[j]];
        r = std::max(r, c / s);
    }
    return r;
}

inline double symmetrized_radius(const std::vector<std::vector<double>>& normals, double c,
                                 const std::vector<std::vector<int>>& sigmas,
                                 const std::vector<double>& dir) {
    double sum = 0.0;
    for (const auto& sigma : sigmas) sum += radius_for_permutation(normals, c, sigma, dir);
    return sum / static_cast<double>(sigmas.size());
}

inline void require_sampling_dim(int n, const char* what) {
    if (n != 2 && n != 3)
        throw unsupported_input_error(std::string(what) + ": region sampling supports n in {2,3}");
}

} // namespace detail

// Smallest rho with rho*d(theta) inside the sigma-permuted copy of c*P(a):
// max over facet normals v of c / ((sigma v).d).
inline double boundary_radius(const DualNormalSet& dual, const Rational& c,
                              const std::vector<int>& sigma, const std::vector<double>& theta) {
    detail::require_sampling_dim(dual.n, "boundary_radius");
    if (static_cast<int>(sigma.size()) != dual.n)
        throw dimension_mismatch_error("boundary_radius: permutation arity mismatch");
    if (static_cast<int>(theta.size()) != dual.n - 1)
        throw dimension_mismatch_error("boundary_radius: expected n-1 angles");
    std::vector<double> dir = detail::direction_from_angles(dual.n, theta);
    for (double d : dir)
        if (!(d > 0.0))
            throw unsupported_input_error(
                "boundary_radius: direction must lie strictly inside the orthant");
    return detail::radius_for_permutation(detail::normals_as_doubles(dual), to_double(c), sigma,
                                          dir);
}

inline double boundary_radius(const MonomialIdeal& a, const Rational& c,
                              const std::vector<int>& sigma, const std::vector<double>& theta,
                              const Limits& limits = {}) {
    return boundary_radius(dual_normals(a, limits), c, sigma, theta);
}

// Radial sample of the symmetrized region: r(theta) = (1/n!) sum_sigma r_sigma(theta).
inline RadialSample symmetrized_region(const DualNormalSet& dual, const Rational& c,
                                       int resolution) {
    detail::require_sampling_dim(dual.n, "symmetrized_region");
    if (resolution < 8) throw config_error("symmetrized_region: resolution must be at least 8");
    if (c <= 0) throw unsupported_input_error("symmetrized_region: c must be positive");

    const int n = dual.n;
    const double step = (std::atan(1.0) * 2.0) / resolution; // (pi/2) / resolution
    RadialSample s;
    s.n = n;
    s.resolution = resolution;
    s.grid.resize(resolution);
    for (int i = 0; i < resolution; ++i) s.grid[i] = (i + 0.5) * step;

    auto normals = detail::normals_as_doubles(dual);
    auto sigmas = detail::all_permutations(n);
    double cd = to_double(c);

    if (n == 2) {
        s.radii.resize(resolution);
        for (int i = 0; i < resolution; ++i) {
            auto dir = detail::direction_from_angles(n, {s.grid[i]});
            s.radii[i] = detail::symmetrized_radius(normals, cd, sigmas, dir);
        }
    } else {
        s.radii.resize(static_cast<std::size_t>(resolution) * resolution);
        for (int i = 0; i < resolution; ++i)
            for (int j = 0; j < resolution; ++j) {
                auto dir = detail::direction_from_angles(n, {s.grid[i], s.grid[j]});
                s.radii[static_cast<std::size_t>(i) * resolution + j] =
                    detail::symmetrized_radius(normals, cd, sigmas, dir);
            }
    }
    for (double r : s.radii)
        if (!std::isfinite(r) || !(r > 0.0))
            throw internal_consistency_error("symmetrized_region: non-finite or non-positive radius");
    return s;
}

inline RadialSample symmetrized_region(const MonomialIdeal& a, const Rational& c, int resolution,
                                       const Limits& limits = {}) {
    return symmetrized_region(dual_normals(a, limits), c, resolution);
}

// Midpoint-rule complement volume of the region described by a radial sample:
// integral of r(theta)^n / n against the angular volume element.
inline double complement_volume_numeric(const RadialSample& s) {
    const double step = (std::atan(1.0) * 2.0) / s.resolution;
    double total = 0.0;
    if (s.n == 2) {
        for (double r : s.radii) total += r * r / 2.0 * step;
    } else {
        for (int i = 0; i < s.resolution; ++i)
            for (int j = 0; j < s.resolution; ++j) {
                double r = s.radii[static_cast<std::size_t>(i) * s.resolution + j];
                total += r * r * r / 3.0 * std::cos(s.grid[j]) * step * step;
            }
    }
    return total;
}

// Direct midpoint-rule discretization of the complement volume of c*P(a)
// itself, integrating the untransformed boundary radius.
inline double numeric_complement_volume(const DualNormalSet& dual, const Rational& c,
                                        int resolution) {
    detail::require_sampling_dim(dual.n, "numeric_complement_volume");
    if (resolution < 8)
        throw config_error("numeric_complement_volume: resolution must be at least 8");
    const int n = dual.n;
    const double step = (std::atan(1.0) * 2.0) / resolution;
    auto normals = detail::normals_as_doubles(dual);
    const double cd = to_double(c);
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    double total = 0.0;
    if (n == 2) {
        for (int i = 0; i < resolution; ++i) {
            auto dir = detail::direction_from_angles(n, {(i + 0.5) * step});
            double r = detail::radius_for_permutation(normals, cd, identity, dir);
            total += r * r / 2.0 * step;
        }
    } else {
        for (int i = 0; i < resolution; ++i)
            for (int j = 0; j < resolution; ++j) {
                double elev = (j + 0.5) * step;
                auto dir = detail::direction_from_angles(n, {(i + 0.5) * step, elev});
                double r = detail::radius_for_permutation(normals, cd, identity, dir);
                total += r * r * r / 3.0 * std::cos(elev) * step * step;
            }
    }
    return total;
}

// Volume comparison and sampled convexity for the symmetrized region Q versus
// P = c*P(a). Per grid direction the original complement volume integrand is
// accumulated as the permutation average of r_sigma^n (equal to the plain
// integrand in the limit, by symmetry of the angular measure), so the
// comparison against (avg_sigma r_sigma)^n holds pointwise by the power-mean
// inequality and the discrete verdict is exact up to roundoff. Convexity is
// probed at midpoints of boundary-point pairs (grid-adjacent plus seeded
// random pairs), requiring |mid| >= r_Q(direction of mid) - convex_tol.
inline CheckReport check_symmetrized_volume(const MonomialIdeal& a, const DualNormalSet& dual,
                                            const Rational& c, int resolution,
                                            double rel_tol = 1e-6, double convex_tol = 1e-6,
                                            std::uint64_t pair_seed = 0x5EEDF00D) {
    CheckReport rep;
    rep.check = "symmetrized_volume";
    rep.ideal = a;
    rep.c = c;
    detail::require_sampling_dim(a.dim(), "check_symmetrized_volume");
    if (resolution < 8)
        throw config_error("check_symmetrized_volume: resolution must be at least 8");
    if (c <= 0) throw unsupported_input_error("check_symmetrized_volume: c must be positive");

    const int n = a.dim();
    auto normals = detail::normals_as_doubles(dual);
    auto sigmas = detail::all_permutations(n);
    const double cd = to_double(c);
    const double step = (std::atan(1.0) * 2.0) / resolution;
    std::vector<double> grid(resolution);
    for (int i = 0; i < resolution; ++i) grid[i] = (i + 0.5) * step;

    double vol_p = 0.0, vol_q = 0.0;
    auto accumulate = [&](const std::vector<double>& theta, double weight) {
        auto dir = detail::direction_from_angles(n, theta);
        double sum = 0.0, sum_pow = 0.0;
        for (const auto& sigma : sigmas) {
            double r = detail::radius_for_permutation(normals, cd, sigma, dir);
            sum += r;
            double p = r;
            for (int t = 1; t < n; ++t) p *= r;
            sum_pow += p;
        }
        const double count = static_cast<double>(sigmas.size());
        double avg = sum / count;
        double avg_pow = avg;
        for (int t = 1; t < n; ++t) avg_pow *= avg;
        vol_q += avg_pow / n * weight;
        vol_p += sum_pow / count / n * weight;
    };
    if (n == 2) {
        for (int i = 0; i < resolution; ++i) accumulate({grid[i]}, step);
    } else {
        for (int i = 0; i < resolution; ++i)
            for (int j = 0; j < resolution; ++j)
                accumulate({grid[i], grid[j]}, std::cos(grid[j]) * step * step);
    }

    rep.add("resolution", static_cast<std::int64_t>(resolution));
    rep.add("volume_tolerance", rel_tol);
    rep.add("convexity_tolerance", convex_tol);
    rep.add("pair_seed", static_cast<std::int64_t>(pair_seed));
    rep.add("complement_volume_original", vol_p);
    rep.add("complement_volume_symmetrized", vol_q);

    if (vol_q > vol_p * (1.0 + rel_tol))
        return rep.conclude(Verdict::Violated,
                            "symmetrized complement volume exceeds the original: " +
                                std::to_string(vol_q) + " > " + std::to_string(vol_p));

    // convexity probe: midpoints of boundary points must stay inside Q
    auto radius_q = [&](const std::vector<double>& theta) {
        auto dir = detail::direction_from_angles(n, theta);
        return detail::symmetrized_radius(normals, cd, sigmas, dir);
    };
    auto boundary_point = [&](const std::vector<double>& theta) {
        auto dir = detail::direction_from_angles(n, theta);
        double r = detail::symmetrized_radius(normals, cd, sigmas, dir);
        for (auto& x : dir) x *= r;
        return dir;
    };
    auto angles_of = [&](const std::vector<double>& x) -> std::vector<double> {
        if (n == 2) return {std::atan2(x[1], x[0])};
        double rho = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        return {std::atan2(x[1], x[0]), std::asin(std::clamp(x[2] / rho, -1.0, 1.0))};
    };

    double worst_gap = 0.0;
    std::int64_t pairs = 0;
    auto probe = [&](const std::vector<double>& ta, const std::vector<double>& tb) {
        auto xa = boundary_point(ta);
        auto xb = boundary_point(tb);
        std::vector<double> mid(xa.size());
        double norm2 = 0.0;
        for (std::size_t i = 0; i < mid.size(); ++i) {
            mid[i] = 0.5 * (xa[i] + xb[i]);
            norm2 += mid[i] * mid[i];
        }
        double rho = std::sqrt(norm2);
        double need = radius_q(angles_of(mid));
        worst_gap = std::max(worst_gap, need - rho);
        ++pairs;
    };

    if (n == 2) {
        for (int i = 0; i + 1 < resolution; ++i) probe({grid[i]}, {grid[i + 1]});
    } else {
        for (int i = 0; i < resolution; ++i)
            for (int j = 0; j + 1 < resolution; ++j) {
                probe({grid[i], grid[j]}, {grid[i], grid[j + 1]});
                probe({grid[j], grid[i]}, {grid[j + 1], grid[i]});
            }
    }
    SeededRng rng(pair_seed);
    const double quarter_pi_x2 = std::atan(1.0) * 2.0;
    for (int t = 0; t < 256; ++t) {
        std::vector<double> ta(n - 1), tb(n - 1);
        for (int i = 0; i < n - 1; ++i) {
            ta[i] = (0.01 + 0.98 * rng.unit_double()) * quarter_pi_x2;
            tb[i] = (0.01 + 0.98 * rng.unit_double()) * quarter_pi_x2;
        }
        probe(ta, tb);
    }
    rep.add("convexity_pairs", pairs);
    rep.add("convexity_worst_gap", worst_gap);

    if (worst_gap > convex_tol)
        return rep.conclude(Verdict::Violated, "convexity midpoint probe failed by " +
                                                   std::to_string(worst_gap));

    bool tie = std::abs(vol_q - vol_p) <= 1e-9 * std::max(vol_p, 1e-300);
    return rep.conclude(tie ? Verdict::HoldsWithEquality : Verdict::Holds);
}

inline CheckReport check_symmetrized_volume(const MonomialIdeal& a, const Rational& c,
                                            int resolution, const Limits& limits = {}) {
    return check_symmetrized_volume(a, dual_normals(a, limits), c, resolution);
}

// Exact power-mean slack: d^{n-1} * sum a_j^n - (sum a_j)^n for positive
// rationals; non-negative, zero exactly when all values coincide.
inline Rational power_mean_gap(int n, const std::vector<Rational>& values) {
    if (n < 1) throw unsupported_input_error("power_mean_gap: n must be >= 1");
    if (values.empty()) throw unsupported_input_error("power_mean_gap: empty input");
    for (const auto& v : values)
        if (v <= 0) throw unsupported_input_error("power_mean_gap: values must be positive");
    Rational sum = 0, sum_pow = 0;
    for (const auto& v : values) {
        sum += v;
        sum_pow += rat_pow(v, static_cast<unsigned>(n));
    }
    Rational lhs = rat_pow(Rational(static_cast<int>(values.size())),
                           static_cast<unsigned>(n - 1)) *
                   sum_pow;
    return lhs - rat_pow(sum, static_cast<unsigned>(n));
}

inline bool power_mean_holds(int n, const std::vector<Rational>& values) {
    return power_mean_gap(n, values) >= 0;
}

// The balanced lattice points at level n+k: with k = nq + r, every vector with
// r coordinates equal to q+2 and the rest q+1.
inline std::vector<ExponentVector> balanced_level_vectors(int n, std::uint64_t k) {
    const std::uint64_t q = k / n, r = k % n;
    std::vector<ExponentVector> out;
    std::vector<int> pick(n, 0);
    for (std::uint64_t i = 0; i < r; ++i) pick[n - 1 - i] = 1;
    std::sort(pick.begin(), pick.end());
    do {
        ExponentVector u(n);
        for (int i = 0; i < n; ++i) u[i] = static_cast<Exponent>(q + 1 + pick[i]);
        out.push_back(u);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

// Exact exclusion step: no balanced level-(n+k) point is interior to c*P(a)
// when k is the multiplier level of (a, c).
inline CheckReport check_balanced_exclusion(const MonomialIdeal& a, const DualNormalSet& dual,
                                            const Rational& c, const Limits& limits = {}) {
    CheckReport rep;
    rep.check = "balanced_exclusion";
    rep.ideal = a;
    rep.c = c;
    const int n = a.dim();
    if (n > 4) return rep.conclude(Verdict::NotApplicable, "");
    auto k = k_level(a, dual, c, limits);
    if (!k) {
        rep.add("k_defined", false);
        return rep.conclude(Verdict::NotApplicable);
    }
    rep.add("k", static_cast<std::int64_t>(*k));
    rep.add("q", static_cast<std::int64_t>(*k / n));
    rep.add("r", static_cast<std::int64_t>(*k % n));
    for (const auto& u : balanced_level_vectors(n, *k)) {
        RationalVector ur(u.begin(), u.end());
        if (classify(dual, ur, c) == RegionClass::Interior) {
            std::string w = "(";
            for (int i = 0; i < n; ++i) w += (i ? "," : "") + std::to_string(u[i]);
            w += ") lies interior to the scaled region";
            return rep.conclude(Verdict::Violated, w);
        }
    }
    rep.add("points_checked",
            static_cast<std::int64_t>(balanced_level_vectors(n, *k).size()));
    return rep.conclude(Verdict::Holds);
}

inline CheckReport check_balanced_exclusion(const MonomialIdeal& a, const Rational& c,
                                            const Limits& limits = {}) {
    return check_balanced_exclusion(a, dual_normals(a, limits), c, limits);
}

// Growth-gadget parameters: the level decomposition k = nq + r plus the grid
// of evaluation points for the monotonicity check.
struct ProofGadgetParams {
    int n = 0;
    std::uint64_t k = 0;
    std::vector<double> grid;

    std::uint64_t q() const { return k / static_cast<std::uint64_t>(n); }
    std::uint64_t r() const { return k % static_cast<std::uint64_t>(n); }
};

// Closed-form volume of the corner region cut by the level hyperplane
// sum_{i<=r} u_i/a + sum_{i>r} u_i/b = 1, with b determined by a so the
// hyperplane passes through the balanced points: checks a^r b^{n-r} / n!
// against a fixed-seed Monte Carlo estimate.
inline CheckReport check_corner_volume(int n, std::uint64_t r, std::uint64_t q,
                                       const Rational& a_param, std::uint64_t samples = 1'000'000,
                                       double rel_tol = 0.02,
                                       std::uint64_t seed = 0xC0FFEE) {
    CheckReport rep;
    rep.check = "corner_volume";
    if (n < 2 || n > 4)
        throw unsupported_input_error("check_corner_volume: n must be in [2,4]");
    if (r > static_cast<std::uint64_t>(n) - 1)
        throw unsupported_input_error("check_corner_volume: need 0 <= r <= n-1");
    const std::uint64_t k = static_cast<std::uint64_t>(n) * q + r;
    const Rational crossing_bound = Rational(static_cast<long>(r * (q + 2)));
    if (a_param <= crossing_bound)
        throw unsupported_input_error("check_corner_volume: need a > r(q+2)");

    const Rational b = a_param * Rational(static_cast<long>((n - r) * (q + 1))) /
                       (a_param - crossing_bound);
    const Rational closed = rat_pow(a_param, static_cast<unsigned>(r)) *
                            rat_pow(b, static_cast<unsigned>(n - r)) /
                            Rational(factorial(static_cast<unsigned>(n)));

    rep.add("n", static_cast<std::int64_t>(n));
    rep.add("r", static_cast<std::int64_t>(r));
    rep.add("q", static_cast<std::int64_t>(q));
    rep.add("k", static_cast<std::int64_t>(k));
    rep.add("a", a_param);
    rep.add("b", b);
    rep.add("closed_form_volume", closed);
    rep.add("samples", static_cast<std::int64_t>(samples));
    rep.add("seed", static_cast<std::int64_t>(seed));
    rep.add("tolerance", rel_tol);

    // the hyperplane meets the diagonal ray at delta = 1/(r/a + (n-r)/b);
    // when a = n+k this is exactly (n+k)/n
    Rational crossing = 1 / (Rational(static_cast<long>(r)) / a_param +
                             Rational(static_cast<long>(n - r)) / b);
    rep.add("diagonal_crossing", crossing);
    if (a_param == Rational(static_cast<long>(n + k)) &&
        crossing != Rational(static_cast<long>(n + k), static_cast<long>(n)))
        return rep.conclude(Verdict::Violated,
                            "diagonal crossing at a = n+k is not (n+k)/n: " + to_string(crossing));

    SeededRng rng(seed);
    const double ad = to_double(a_param), bd = to_double(b);
    const double inv_a = 1.0 / ad, inv_b = 1.0 / bd;
    std::uint64_t hits = 0;
    std::vector<double> u(n);
    for (std::uint64_t s = 0; s < samples; ++s) {
        double lhs = 0.0;
        for (int i = 0; i < n; ++i) {
            double scale = static_cast<std::uint64_t>(i) < r ? ad : bd;
            double inv = static_cast<std::uint64_t>(i) < r ? inv_a : inv_b;
            lhs += scale * rng.unit_double() * inv;
        }
        if (lhs <= 1.0) ++hits;
    }
    double box = std::pow(ad, static_cast<double>(r)) *
                 std::pow(bd, static_cast<double>(n - static_cast<int>(r)));
    double estimate = box * static_cast<double>(hits) / static_cast<double>(samples);
    double closed_d = to_double(closed);
    double rel = std::abs(estimate - closed_d) / closed_d;
    rep.add("monte_carlo_volume", estimate);
    rep.add("relative_error", rel);
    if (rel > rel_tol)
        return rep.conclude(Verdict::Violated, "Monte Carlo disagrees with the closed form by " +
                                                   std::to_string(rel));
    return rep.conclude(Verdict::Holds);
}

// Offsets K_i in the growth function: K_i = r(n-r)(q+1)/(i-r) - r(q+2) for
// i = r+1..n; always ends at K_n = -r.
inline std::vector<Rational> growth_offsets(int n, std::uint64_t k) {
    const std::uint64_t q = k / n, r = k % n;
    std::vector<Rational> out;
    for (std::uint64_t i = r + 1; i <= static_cast<std::uint64_t>(n); ++i) {
        Rational ki = Rational(static_cast<long>(r * (n - r) * (q + 1)),
                               static_cast<long>(i - r)) -
                      Rational(static_cast<long>(r * (q + 2)));
        out.push_back(ki);
    }
    return out;
}

// Monotonicity of the growth function g(a) = a^r * prod_{i>r} a/(a+K_i) (the
// bound function up to its positive constant): strictly increasing above n+k.
// Grid points at or below n+k are skipped and counted. Evaluation is exact:
// each double grid point converts to the rational it denotes.
inline CheckReport check_growth_monotonicity(const ProofGadgetParams& params) {
    CheckReport rep;
    rep.check = "growth_monotonicity";
    const int n = params.n;
    if (n < 1 || n > 4)
        throw unsupported_input_error("check_growth_monotonicity: n must be in [1,4]");
    const std::uint64_t q = params.q(), r = params.r();
    rep.add("n", static_cast<std::int64_t>(n));
    rep.add("k", static_cast<std::int64_t>(params.k));
    rep.add("q", static_cast<std::int64_t>(q));
    rep.add("r", static_cast<std::int64_t>(r));
    if (r == 0)
        return rep.conclude(Verdict::NotApplicable,
                            "");  // r = 0 zeroes every offset, so g is constant

    auto offsets = growth_offsets(n, params.k);
    if (offsets.back() != -Rational(static_cast<long>(r)))
        return rep.conclude(Verdict::Violated,
                            "last offset is not -r: " + to_string(offsets.back()));
    for (std::size_t i = 0; i + 1 < offsets.size(); ++i)
        if (!(offsets[i] > offsets[i + 1]))
            return rep.conclude(Verdict::Violated, "offsets are not strictly decreasing");
    for (std::size_t i = 0; i < offsets.size(); ++i)
        rep.add("K_" + std::to_string(r + 1 + i), offsets[i]);

    const Rational threshold(static_cast<long>(n + params.k));
    auto g = [&](const Rational& a) {
        Rational val = rat_pow(a, static_cast<unsigned>(r));
        for (const auto& ki : offsets) val *= a / (a + ki);
        return val;
    };

    std::int64_t skipped = 0, used = 0;
    bool have_prev = false;
    Rational prev_a, prev_g;
    for (double x : params.grid) {
        Rational a(x);  // exact value of the double
        if (a <= threshold) {
            ++skipped;
            continue;
        }
        Rational val = g(a);
        if (have_prev) {
            if (a <= prev_a)
                throw config_error("check_growth_monotonicity: grid must be increasing");
            if (val <= prev_g)
                return rep.conclude(
                    Verdict::Violated,
                    "g(" + to_string(a) + ") = " + to_string(val) + " does not exceed g(" +
                        to_string(prev_a) + ") = " + to_string(prev_g));
        }
        prev_a = a;
        prev_g = val;
        have_prev = true;
        ++used;
    }
    rep.add("grid_points_used", used);
    rep.add("grid_points_skipped_at_or_below_threshold", skipped);
    if (used < 2)
        return rep.conclude(Verdict::NotApplicable,
                            "");  // nothing to compare above the threshold
    return rep.conclude(Verdict::Holds);
}

} // namespace staircase
