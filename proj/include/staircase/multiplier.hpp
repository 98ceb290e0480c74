#pragma once

#include <optional>

#include "newton.hpp"

namespace staircase {

// I(a^c) by the interior criterion: x^u lies in the multiplier ideal exactly
// when u + (1,...,1) is interior to c*P(a). Enumerates the box prod [0, ceil(c*p_i)];
// the box suffices because v.(ceil(c*p_i)e_i + e) >= c*p_i*v_i + v.e > c follows
// from v_i >= 1/p_i, so each pure box corner already lies in the ideal. That
// bound is re-verified executably on every call.
inline MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const DualNormalSet& dual,
                                      const Rational& c, const Limits& limits = {}) {
    if (c <= 0) throw unsupported_input_error("multiplier_ideal: c must be positive");
    if (a.is_unit()) return a;
    const int n = a.dim();
    ExponentVector p = pure_power_exponents(a);
    ExponentVector dims(n);
    std::uint64_t max_coord = 0;
    for (int i = 0; i < n; ++i) {
        BigInt bound = rat_ceil(c * Rational(p[i]));
        if (bound > Limits::max_exponent)
            throw resource_limit_error("multiplier_ideal: scaled box exceeds exponent cap");
        dims[i] = bound.convert_to<Exponent>() + 1;
        max_coord = std::max<std::uint64_t>(max_coord, dims[i]);
    }
    std::uint64_t size = detail::checked_box_size(dims, limits, "multiplier_ideal");

    auto cls = detail::IntClassifier::make(dual, c, max_coord);
    auto shifted_class = [&](const ExponentVector& u) {
        ExponentVector s(u);
        for (auto& x : s) ++x;
        return cls.classify_point(s);
    };

    for (int i = 0; i < n; ++i) {
        ExponentVector corner(n, 0);
        corner[i] = dims[i] - 1;
        if (shifted_class(corner) != RegionClass::Interior)
            throw internal_consistency_error(
                "multiplier_ideal: search-box corner failed the interior test");
    }

    std::vector<char> inside(size, 0);
    std::vector<std::uint64_t> stride(n, 1);
    for (int i = 1; i < n; ++i) stride[i] = stride[i - 1] * dims[i - 1];
    std::uint64_t idx = 0;
    detail::for_each_box_point(dims, [&](const ExponentVector& u) {
        if (shifted_class(u) == RegionClass::Interior) inside[idx] = 1;
        ++idx;
    });
    std::vector<ExponentVector> mins;
    idx = 0;
    detail::for_each_box_point(dims, [&](const ExponentVector& u) {
        if (inside[idx]) {
            bool minimal = true;
            for (int i = 0; i < n && minimal; ++i)
                if (u[i] > 0 && inside[idx - stride[i]]) minimal = false;
            if (minimal) mins.push_back(u);
        }
        ++idx;
    });
    if (mins.empty())
        throw internal_consistency_error("multiplier_ideal: scan found no minimal members");
    return MonomialIdeal::build(n, std::move(mins), limits);
}

inline MonomialIdeal multiplier_ideal(const MonomialIdeal& a, const Rational& c,
                                      const Limits& limits = {}) {
    if (!is_m_primary(a)) throw unsupported_input_error("multiplier_ideal: not m-primary");
    if (c <= 0) throw unsupported_input_error("multiplier_ideal: c must be positive");
    if (a.is_unit()) return a;
    return multiplier_ideal(a, dual_normals(a, limits), c, limits);
}

// tau(a^c) for monomial ideals coincides with the multiplier ideal; exposed as
// a named alias so the positive-characteristic statement is callable directly.
inline MonomialIdeal test_ideal_monomial(const MonomialIdeal& a, const Rational& c,
                                         const Limits& limits = {}) {
    return multiplier_ideal(a, c, limits);
}

// Largest k >= 0 with multiplier_ideal(a,c) contained in m^{k+1}; absent when
// the multiplier ideal is the whole ring.
inline std::optional<std::uint64_t> k_level(const MonomialIdeal& a, const DualNormalSet& dual,
                                            const Rational& c, const Limits& limits = {}) {
    MonomialIdeal j = multiplier_ideal(a, dual, c, limits);
    if (j.is_unit()) return std::nullopt;
    return order(j) - 1;
}

inline std::optional<std::uint64_t> k_level(const MonomialIdeal& a, const Rational& c,
                                            const Limits& limits = {}) {
    MonomialIdeal j = multiplier_ideal(a, c, limits);
    if (j.is_unit()) return std::nullopt;
    return order(j) - 1;
}

} // namespace staircase
