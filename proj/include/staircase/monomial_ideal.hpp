#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace staircase {

using Exponent = std::uint32_t;
using ExponentVector = std::vector<Exponent>;

// Resource caps. The soft caps are per-call configurable; the hard caps are
// absolute and raising a soft cap past them has no effect.
struct Limits {
    int max_dim = 6;
    std::size_t max_generators = 32;        // applies to input ideals, post-minimalization
    std::uint64_t max_enumeration = 50'000'000;  // lattice points visited per box scan

    static constexpr int hard_max_dim = 8;
    static constexpr std::size_t hard_max_generators = 128;
    static constexpr Exponent max_exponent = 1'000'000;

    int effective_max_dim() const { return std::min(max_dim, hard_max_dim); }
    std::size_t effective_max_generators() const {
        return std::min(max_generators, hard_max_generators);
    }
};

inline std::uint64_t one_norm(const ExponentVector& v) {
    std::uint64_t s = 0;
    for (Exponent e : v) s += e;
    return s;
}

// a <= b componentwise; monomial x^b is divisible by x^a.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool lex_greater(const ExponentVector& a, const ExponentVector& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// Keeps the minimal elements under componentwise order, deduplicated and
// sorted lexicographically descending.
inline std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
    std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
        std::uint64_t na = one_norm(a), nb = one_norm(b);
        if (na != nb) return na < nb;
        return lex_greater(a, b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExponentVector> out;
    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& kept : out) {
            if (divides(kept, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), lex_greater);
    return out;
}

class MonomialIdeal {
public:
    static MonomialIdeal from_generators(int n, std::vector<ExponentVector> gens,
                                         const Limits& limits = {}) {
        MonomialIdeal a = build(n, std::move(gens), limits);
        if (a.generators().size() > limits.effective_max_generators())
            throw resource_limit_error("ideal has " + std::to_string(a.generators().size()) +
                                       " minimal generators, cap is " +
                                       std::to_string(limits.effective_max_generators()));
        return a;
    }

    static MonomialIdeal unit(int n) { return build(n, {ExponentVector(n, 0)}, {}); }

    static MonomialIdeal maximal(int n) { return maximal_power(n, 1); }

    // m^d: all exponent vectors of one-norm d.
    static MonomialIdeal maximal_power(int n, Exponent d) {
        check_dim(n, {});
        if (d == 0) return unit(n);
        std::vector<ExponentVector> gens;
        ExponentVector u(n, 0);
        u[0] = d;
        while (true) {
            gens.push_back(u);
            // next composition of d into n parts, colex-style odometer
            int i = n - 2;
            while (i >= 0 && u[i] == 0) --i;
            if (i < 0) break;
            --u[i];
            Exponent tail = u[n - 1] + 1;
            u[n - 1] = 0;
            u[i + 1] = tail;
        }
        return build(n, std::move(gens), {});
    }

    int dim() const { return n_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }

    bool is_unit() const { return gens_.size() == 1 && one_norm(gens_[0]) == 0; }

    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    // Internal constructor for derived ideals (products, closures, multiplier
    // ideals): validates shape but applies no generator-count cap.
    static MonomialIdeal build(int n, std::vector<ExponentVector> gens, const Limits& limits) {
        check_dim(n, limits);
        if (gens.empty()) throw unsupported_input_error("ideal needs at least one generator");
        for (const auto& g : gens) {
            if (static_cast<int>(g.size()) != n)
                throw dimension_mismatch_error("generator arity " + std::to_string(g.size()) +
                                               " != ambient dimension " + std::to_string(n));
            for (Exponent e : g)
                if (e > Limits::max_exponent)
                    throw resource_limit_error("exponent " + std::to_string(e) + " exceeds cap " +
                                               std::to_string(Limits::max_exponent));
        }
        MonomialIdeal a;
        a.n_ = n;
        a.gens_ = minimalize(std::move(gens));
        return a;
    }

private:
    static void check_dim(int n, const Limits& limits) {
        if (n < 1) throw unsupported_input_error("ambient dimension must be >= 1");
        if (n > limits.effective_max_dim())
            throw resource_limit_error("dimension " + std::to_string(n) + " exceeds cap " +
                                       std::to_string(limits.effective_max_dim()));
    }

    int n_ = 0;
    std::vector<ExponentVector> gens_;
};

// x^u in a?
inline bool contains(const MonomialIdeal& a, const ExponentVector& u) {
    if (static_cast<int>(u.size()) != a.dim())
        throw dimension_mismatch_error("point arity does not match ideal dimension");
    for (const auto& g : a.generators())
        if (divides(g, u)) return true;
    return false;
}

// True iff every coordinate axis has a pure power among the generators.
inline bool is_m_primary(const MonomialIdeal& a) {
    int n = a.dim();
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& g : a.generators()) {
            bool pure = true;
            for (int j = 0; j < n; ++j)
                if (j != i && g[j] != 0) {
                    pure = false;
                    break;
                }
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// For m-primary a, the exponent p_i of the minimal pure power x_i^{p_i} in a.
inline ExponentVector pure_power_exponents(const MonomialIdeal& a) {
    if (!is_m_primary(a)) throw unsupported_input_error("ideal is not m-primary");
    int n = a.dim();
    ExponentVector p(n, 0);
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& g : a.generators()) {
            bool pure = true;
            for (int j = 0; j < n; ++j)
                if (j != i && g[j] != 0) {
                    pure = false;
                    break;
                }
            if (pure && (!found || g[i] < p[i])) {
                p[i] = g[i];
                found = true;
            }
        }
    }
    return p;
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim())
        throw dimension_mismatch_error("product of ideals in different dimensions");
    std::vector<ExponentVector> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) {
            ExponentVector s(g.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::uint64_t v = std::uint64_t(g[i]) + h[i];
                if (v > Limits::max_exponent)
                    throw resource_limit_error("product exponent exceeds cap");
                s[i] = static_cast<Exponent>(v);
            }
            gens.push_back(std::move(s));
        }
    return MonomialIdeal::build(a.dim(), std::move(gens), {});
}

inline MonomialIdeal power(const MonomialIdeal& a, unsigned r) {
    if (r == 0) return MonomialIdeal::unit(a.dim());
    MonomialIdeal out = a;
    for (unsigned i = 1; i < r; ++i) out = product(out, a);
    return out;
}

// Smallest one-norm of a generator (the largest t with a contained in m^t).
inline std::uint64_t order(const MonomialIdeal& a) {
    std::uint64_t best = UINT64_MAX;
    for (const auto& g : a.generators()) best = std::min(best, one_norm(g));
    return best;
}

namespace detail {

// Odometer over the box prod [0, dims[i]). Calls f(u) for every point.
template <typename F>
void for_each_box_point(const ExponentVector& dims, F&& f) {
    for (Exponent d : dims)
        if (d == 0) return;
    ExponentVector u(dims.size(), 0);
    while (true) {
        f(u);
        std::size_t i = 0;
        while (i < u.size()) {
            if (++u[i] < dims[i]) break;
            u[i] = 0;
            ++i;
        }
        if (i == u.size()) break;
    }
}

inline std::uint64_t checked_box_size(const ExponentVector& dims, const Limits& limits,
                                      const char* what) {
    std::uint64_t size = 1;
    for (Exponent d : dims) {
        if (d != 0 && size > limits.max_enumeration / d)
            throw resource_limit_error(std::string(what) + ": box exceeds enumeration cap");
        size *= d;
    }
    if (size > limits.max_enumeration)
        throw resource_limit_error(std::string(what) + ": box exceeds enumeration cap");
    return size;
}

} // namespace detail

// Number of standard monomials, i.e. lattice points under the staircase.
// Finite exactly when a is m-primary; every gap lives in prod [0, p_i).
inline BigInt colength(const MonomialIdeal& a, const Limits& limits = {}) {
    if (a.is_unit()) return 0;
    ExponentVector p = pure_power_exponents(a);
    detail::checked_box_size(p, limits, "colength");
    BigInt gaps = 0;
    detail::for_each_box_point(p, [&](const ExponentVector& u) {
        if (!contains(a, u)) ++gaps;
    });
    return gaps;
}

} // namespace staircase
