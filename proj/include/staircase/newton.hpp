#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "monomial_ideal.hpp"
#include "rational.hpp"

namespace staircase {

using RationalVector = std::vector<Rational>;

enum class RegionClass { Outside, Boundary, Interior };

inline const char* to_string(RegionClass r) {
    switch (r) {
        case RegionClass::Outside: return "Outside";
        case RegionClass::Boundary: return "Boundary";
        default: return "Interior";
    }
}

// The non-coordinate facet normals of P(a) = conv(gens) + R^n_+, each
// normalized so the facet is {u : v.u = 1}. P(a) = {u >= 0 : v.u >= 1 for all v}.
struct DualNormalSet {
    int n = 0;
    std::vector<RationalVector> normals;
};

namespace detail {

inline Rational dot(const RationalVector& v, const ExponentVector& g) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * g[i];
    return s;
}

inline Rational dot(const RationalVector& v, const RationalVector& u) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * u[i];
    return s;
}

// Vertices of D = {b >= 0 : b.g >= 1 for all generators g}, by brute force
// over n-subsets of the constraints {b.g = 1} union {b_i = 0}.
template <typename Int>
std::set<RationalVector> enumerate_dual_vertices(const MonomialIdeal& a) {
    const int n = a.dim();
    const auto& gens = a.generators();
    const std::size_t total = gens.size() + static_cast<std::size_t>(n);

    std::set<RationalVector> found;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    std::vector<Int> rhs(n);

    std::vector<std::size_t> comb(n);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    bool done = false;
    while (!done) {
        for (int r = 0; r < n; ++r) {
            std::size_t idx = comb[r];
            if (idx < gens.size()) {
                for (int j = 0; j < n; ++j) m[r][j] = Int(gens[idx][j]);
                rhs[r] = Int(1);
            } else {
                for (int j = 0; j < n; ++j) m[r][j] = Int(0);
                m[r][static_cast<int>(idx - gens.size())] = Int(1);
                rhs[r] = Int(0);
            }
        }
        auto sol = solve_cramer(m, rhs);
        if (!sol.singular) {
            Int det = sol.det;
            auto numer = sol.numer;
            if (det < 0) {
                det = -det;
                for (auto& x : numer) x = -x;
            }
            bool feasible = true;
            for (int j = 0; j < n && feasible; ++j)
                if (numer[j] < 0) feasible = false;
            for (std::size_t g = 0; g < gens.size() && feasible; ++g) {
                Int s(0);
                for (int j = 0; j < n; ++j) s += Int(gens[g][j]) * numer[j];
                if (s < det) feasible = false;
            }
            if (feasible) {
                RationalVector v(n);
                for (int j = 0; j < n; ++j) v[j] = Rational(BigInt(numer[j]), BigInt(det));
                found.insert(std::move(v));
            }
        }
        // next n-combination of {0, ..., total-1}
        done = true;
        for (int i = n - 1; i >= 0; --i) {
            if (comb[i] != i + total - n) {
                ++comb[i];
                for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
                done = false;
                break;
            }
        }
    }
    return found;
}

} // namespace detail

inline DualNormalSet dual_normals(const MonomialIdeal& a, const Limits& limits = {}) {
    if (!is_m_primary(a)) throw unsupported_input_error("dual_normals: ideal is not m-primary");
    if (a.is_unit())
        throw unsupported_input_error("dual_normals: unit ideal has no facet description");
    const int n = a.dim();
    const auto& gens = a.generators();

    BigInt systems = binomial(static_cast<unsigned>(gens.size() + n), static_cast<unsigned>(n));
    if (systems > limits.max_enumeration)
        throw resource_limit_error("dual_normals: " + systems.str() +
                                   " candidate subsystems exceed the enumeration cap");

    Exponent max_entry = 0;
    for (const auto& g : gens)
        for (Exponent e : g) max_entry = std::max(max_entry, e);

    // Bareiss intermediates are minors of the constraint matrix; with entries
    // <= 64 and n <= 6 every minor and feasibility dot product fits in int64.
    std::set<RationalVector> cand = (max_entry <= 64 && n <= 6)
                                        ? detail::enumerate_dual_vertices<std::int64_t>(a)
                                        : detail::enumerate_dual_vertices<BigInt>(a);

    // Witness pruning: v survives only if its facet's generator centroid is
    // strictly beyond every other candidate hyperplane. Blocking duality makes
    // every feasible basic solution a true facet normal, so this is a safety
    // net, not a workhorse.
    std::vector<RationalVector> vs(cand.begin(), cand.end());
    std::vector<RationalVector> kept;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        RationalVector centroid(n, Rational(0));
        std::size_t tight = 0;
        for (const auto& g : gens) {
            if (detail::dot(vs[i], g) == 1) {
                for (int j = 0; j < n; ++j) centroid[j] += g[j];
                ++tight;
            }
        }
        if (tight == 0) continue;
        for (auto& x : centroid) x /= static_cast<int>(tight);
        bool redundant = false;
        for (std::size_t w = 0; w < vs.size() && !redundant; ++w)
            if (w != i && detail::dot(vs[w], centroid) <= 1) redundant = true;
        if (!redundant) kept.push_back(vs[i]);
    }
    if (kept.empty())
        throw internal_consistency_error("dual_normals: no facet normals survived");
    std::sort(kept.begin(), kept.end());
    return DualNormalSet{n, std::move(kept)};
}

inline RegionClass classify(const DualNormalSet& dual, const RationalVector& u,
                            const Rational& c) {
    if (static_cast<int>(u.size()) != dual.n)
        throw dimension_mismatch_error("classify: point arity does not match dual set");
    if (c <= 0) throw unsupported_input_error("classify: scale c must be positive");
    bool boundary = false;
    for (const Rational& x : u) {
        if (x < 0) return RegionClass::Outside;
        if (x == 0) boundary = true;
    }
    for (const auto& v : dual.normals) {
        Rational s = detail::dot(v, u);
        if (s < c) return RegionClass::Outside;
        if (s == c) boundary = true;
    }
    return boundary ? RegionClass::Boundary : RegionClass::Interior;
}

inline DualNormalSet dual_of(const MonomialIdeal& a, const Limits& limits = {}) {
    // Unit ideal: P = R^n_+, no non-coordinate facets.
    if (a.is_unit()) return DualNormalSet{a.dim(), {}};
    return dual_normals(a, limits);
}

inline RegionClass classify(const MonomialIdeal& a, const RationalVector& u, const Rational& c,
                            const Limits& limits = {}) {
    if (!is_m_primary(a)) throw unsupported_input_error("classify: ideal is not m-primary");
    return classify(dual_of(a, limits), u, c);
}

inline RationalVector ones_vector(int n) { return RationalVector(n, Rational(1)); }

inline Rational lct(const DualNormalSet& dual) {
    if (dual.normals.empty())
        throw unsupported_input_error("lct: unit ideal has no log canonical threshold");
    RationalVector e = ones_vector(dual.n);
    Rational best = detail::dot(dual.normals.front(), e);
    for (std::size_t i = 1; i < dual.normals.size(); ++i)
        best = std::min(best, detail::dot(dual.normals[i], e));
    return best;
}

inline Rational lct(const MonomialIdeal& a, const Limits& limits = {}) {
    if (a.is_unit()) throw unsupported_input_error("lct: unit ideal");
    return lct(dual_normals(a, limits));
}

namespace detail {

// Integer-cleared form of the tests "v.u <op> c" for lattice points u >= 0:
// per normal, coeff.u is compared against rhs where coeff = den(c)*L*v and
// rhs = num(c)*L with L clearing v's denominators. Falls back to big integers
// when the cleared values could overflow int64 dot products.
class IntClassifier {
public:
    static IntClassifier make(const DualNormalSet& dual, const Rational& c,
                              std::uint64_t max_coord) {
        if (c <= 0) throw unsupported_input_error("classifier: scale c must be positive");
        IntClassifier out;
        out.n_ = dual.n;
        std::vector<std::vector<BigInt>> coeffs;
        std::vector<BigInt> rhss;
        BigInt dc = den(c), nc = num(c);
        for (const auto& v : dual.normals) {
            BigInt L = 1;
            for (const auto& x : v) L = BigInt(lcm(L, den(x)));
            std::vector<BigInt> row(dual.n);
            for (int j = 0; j < dual.n; ++j) row[j] = dc * (L / den(v[j])) * num(v[j]);
            coeffs.push_back(std::move(row));
            rhss.push_back(nc * L);
        }
        BigInt mag = 0;
        for (const auto& row : coeffs)
            for (const auto& x : row) mag = std::max(mag, BigInt(abs(x)));
        for (const auto& r : rhss) mag = std::max(mag, BigInt(abs(r)));
        BigInt worst = mag * (BigInt(max_coord) + 1) * dual.n;
        if (worst < (BigInt(1) << 62)) {
            out.i64_ = true;
            for (std::size_t r = 0; r < coeffs.size(); ++r) {
                RowI row;
                row.a.reserve(dual.n);
                for (const auto& x : coeffs[r]) row.a.push_back(x.convert_to<std::int64_t>());
                row.t = rhss[r].convert_to<std::int64_t>();
                out.ri_.push_back(std::move(row));
            }
        } else {
            out.i64_ = false;
            for (std::size_t r = 0; r < coeffs.size(); ++r)
                out.rb_.push_back(RowB{std::move(coeffs[r]), std::move(rhss[r])});
        }
        return out;
    }

    RegionClass classify_point(const ExponentVector& u) const {
        bool boundary = false;
        for (Exponent x : u)
            if (x == 0) {
                boundary = true;
                break;
            }
        if (i64_) {
            for (const auto& r : ri_) {
                std::int64_t s = 0;
                for (std::size_t j = 0; j < r.a.size(); ++j)
                    s += r.a[j] * static_cast<std::int64_t>(u[j]);
                if (s < r.t) return RegionClass::Outside;
                if (s == r.t) boundary = true;
            }
        } else {
            for (const auto& r : rb_) {
                BigInt s = 0;
                for (std::size_t j = 0; j < r.a.size(); ++j) s += r.a[j] * u[j];
                if (s < r.t) return RegionClass::Outside;
                if (s == r.t) boundary = true;
            }
        }
        return boundary ? RegionClass::Boundary : RegionClass::Interior;
    }

    bool member(const ExponentVector& u) const {
        return classify_point(u) != RegionClass::Outside;
    }

private:
    struct RowI {
        std::vector<std::int64_t> a;
        std::int64_t t = 0;
    };
    struct RowB {
        std::vector<BigInt> a;
        BigInt t;
    };
    int n_ = 0;
    bool i64_ = false;
    std::vector<RowI> ri_;
    std::vector<RowB> rb_;
};

// Recursive fan triangulation of a bounded face of P given its generator
// points. `pool` holds every facet-defining constraint of P as (normal, rhs).
inline std::vector<std::vector<ExponentVector>> triangulate_face(
    std::vector<ExponentVector> verts, std::size_t d,
    const std::vector<std::pair<RationalVector, Rational>>& pool) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (d == 0) {
        if (verts.size() != 1)
            throw internal_consistency_error("triangulate: zero-dimensional face with " +
                                             std::to_string(verts.size()) + " points");
        return {{verts[0]}};
    }
    if (d == 1) {
        // collinear integer points: lexicographic extremes are the endpoints
        return {{verts.front(), verts.back()}};
    }
    const ExponentVector& apex = verts.front(); // lex-min point is a vertex of the face
    std::vector<std::vector<ExponentVector>> out;
    std::set<std::vector<ExponentVector>> seen;
    for (const auto& [normal, rhs] : pool) {
        std::vector<ExponentVector> tight;
        bool apex_tight = false;
        for (const auto& p : verts) {
            if (dot(normal, p) == rhs) {
                if (p == apex) apex_tight = true;
                tight.push_back(p);
            }
        }
        if (apex_tight || tight.empty() || tight.size() == verts.size()) continue;
        if (!seen.insert(tight).second) continue;
        std::vector<std::vector<Rational>> pts;
        for (const auto& p : tight) {
            std::vector<Rational> q(p.size());
            for (std::size_t j = 0; j < p.size(); ++j) q[j] = p[j];
            pts.push_back(std::move(q));
        }
        if (affine_dim(pts) != d - 1) continue; // lower-dimensional tangency, not a facet of this face
        for (auto& s : triangulate_face(std::move(tight), d - 1, pool)) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
    if (out.empty()) throw internal_consistency_error("triangulate: face produced no simplices");
    return out;
}

} // namespace detail

// Exact Vol(R^n_+ \ P(a)): cone the origin over each bounded facet, triangulate
// the facet, and sum |det| / n! over the resulting simplices. All arithmetic is
// integer determinants, so the result is exactly rational.
inline Rational complement_volume(const MonomialIdeal& a, const Limits& limits = {}) {
    if (!is_m_primary(a)) throw unsupported_input_error("complement_volume: not m-primary");
    if (a.is_unit()) throw unsupported_input_error("complement_volume: unit ideal");
    const int n = a.dim();
    const auto& gens = a.generators();
    DualNormalSet dual = dual_normals(a, limits);

    std::vector<std::pair<RationalVector, Rational>> pool;
    for (const auto& v : dual.normals) pool.emplace_back(v, Rational(1));
    for (int i = 0; i < n; ++i) {
        RationalVector e(n, Rational(0));
        e[i] = 1;
        pool.emplace_back(std::move(e), Rational(0));
    }

    BigInt scaled_total = 0; // accumulates n! * volume
    for (const auto& v : dual.normals) {
        std::vector<ExponentVector> facet;
        for (const auto& g : gens)
            if (detail::dot(v, g) == 1) facet.push_back(g);
        {
            std::vector<std::vector<Rational>> pts;
            for (const auto& p : facet) {
                std::vector<Rational> q(p.size());
                for (std::size_t j = 0; j < p.size(); ++j) q[j] = p[j];
                pts.push_back(std::move(q));
            }
            if (detail::affine_dim(pts) != static_cast<std::size_t>(n - 1))
                throw internal_consistency_error(
                    "complement_volume: facet is not (n-1)-dimensional");
        }
        for (const auto& simplex :
             detail::triangulate_face(facet, static_cast<std::size_t>(n - 1), pool)) {
            std::vector<std::vector<BigInt>> m;
            for (const auto& p : simplex) {
                std::vector<BigInt> row(n);
                for (int j = 0; j < n; ++j) row[j] = p[j];
                m.push_back(std::move(row));
            }
            BigInt d = detail::det_bareiss(std::move(m));
            if (d == 0)
                throw internal_consistency_error("complement_volume: degenerate cone simplex");
            scaled_total += BigInt(abs(d));
        }
    }
    return Rational(scaled_total, factorial(static_cast<unsigned>(n)));
}

// Samuel multiplicity e(a) = n! * Vol(R^n_+ \ P(a)), asserted integral.
inline BigInt multiplicity(const MonomialIdeal& a, const Limits& limits = {}) {
    Rational e = factorial(static_cast<unsigned>(a.dim())) * complement_volume(a, limits);
    if (den(e) != 1)
        throw internal_consistency_error("multiplicity: n! * volume is not an integer: " +
                                         to_string(e));
    return num(e);
}

// e(a^c) = c^n e(a) for rational c > 0.
inline Rational scaled_multiplicity(const MonomialIdeal& a, const Rational& c,
                                    const Limits& limits = {}) {
    if (c <= 0) throw unsupported_input_error("scaled_multiplicity: c must be positive");
    return rat_pow(c, static_cast<unsigned>(a.dim())) * Rational(multiplicity(a, limits));
}

// Monomials whose exponents lie in P(a); every minimal one fits in the box
// prod [0, p_i] because u_i > p_i would let the pure power p_i e_i divide u.
inline MonomialIdeal integral_closure(const MonomialIdeal& a, const Limits& limits = {}) {
    if (!is_m_primary(a)) throw unsupported_input_error("integral_closure: not m-primary");
    if (a.is_unit()) return a;
    const int n = a.dim();
    ExponentVector p = pure_power_exponents(a);
    ExponentVector dims(p);
    std::uint64_t max_coord = 0;
    for (int i = 0; i < n; ++i) {
        dims[i] = p[i] + 1;
        max_coord = std::max<std::uint64_t>(max_coord, p[i]);
    }
    std::uint64_t size = detail::checked_box_size(dims, limits, "integral_closure");

    DualNormalSet dual = dual_normals(a, limits);
    auto cls = detail::IntClassifier::make(dual, Rational(1), max_coord);

    std::vector<char> inside(size, 0);
    std::vector<std::uint64_t> stride(n, 1);
    for (int i = 1; i < n; ++i) stride[i] = stride[i - 1] * dims[i - 1];
    std::uint64_t idx = 0;
    std::vector<ExponentVector> mins;
    detail::for_each_box_point(dims, [&](const ExponentVector& u) {
        if (cls.member(u)) inside[idx] = 1;
        ++idx;
    });
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
    return MonomialIdeal::build(n, std::move(mins), limits);
}

} // namespace staircase
