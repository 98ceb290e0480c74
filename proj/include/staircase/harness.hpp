#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "monomial_ideal.hpp"
#include "multiplier.hpp"
#include "newton.hpp"
#include "radial.hpp"
#include "report.hpp"
#include "rng.hpp"

// Bound checks over a single ideal plus the randomized sweep harness that
// runs a selection of them across generated families.

namespace staircase {

// Per-ideal context: the dual description plus lazily computed invariants,
// shared across all checks run against the same ideal.
class IdealAnalysis {
public:
    explicit IdealAnalysis(MonomialIdeal a, const Limits& limits = {})
        : a_(std::move(a)), limits_(limits) {
        if (!is_m_primary(a_))
            throw unsupported_input_error("bound checks require a finite-colength ideal");
        dual_ = dual_of(a_, limits_);
    }

    const MonomialIdeal& ideal() const { return a_; }
    const DualNormalSet& dual() const { return dual_; }
    const Limits& limits() const { return limits_; }

    const BigInt& colength() const {
        if (!colength_) colength_ = staircase::colength(a_, limits_);
        return *colength_;
    }

    const BigInt& multiplicity() const {
        if (!multiplicity_) multiplicity_ = staircase::multiplicity(a_, limits_);
        return *multiplicity_;
    }

    const MonomialIdeal& closure() const {
        if (!closure_) closure_ = integral_closure(a_, limits_);
        return *closure_;
    }

    const MonomialIdeal& multiplier_at_one() const {
        if (!multiplier_one_) multiplier_one_ = multiplier_ideal(a_, dual_, 1, limits_);
        return *multiplier_one_;
    }

    std::optional<std::uint64_t> level(const Rational& c) const {
        auto it = levels_.find(c);
        if (it != levels_.end()) return it->second;
        std::optional<std::uint64_t> k;
        if (c == 1) {
            const MonomialIdeal& j = multiplier_at_one();
            if (!j.is_unit()) k = order(j) - 1;
        } else {
            k = k_level(a_, dual_, c, limits_);
        }
        levels_.emplace(c, k);
        return k;
    }

private:
    MonomialIdeal a_;
    Limits limits_;
    DualNormalSet dual_;
    mutable std::optional<BigInt> colength_;
    mutable std::optional<BigInt> multiplicity_;
    mutable std::optional<MonomialIdeal> closure_;
    mutable std::optional<MonomialIdeal> multiplier_one_;
    mutable std::map<Rational, std::optional<std::uint64_t>> levels_;
};

namespace detail {

inline QuantityValue int_quantity(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return Rational(v);
}

} // namespace detail

// If the ideal equals a power of the maximal ideal, returns that power.
// Criterion: every minimal generator has the same total degree d and the
// generator count matches the full layer binom(n+d-1, n-1); a staircase with
// all generators in one layer sits inside that layer's span, so matching
// cardinality forces equality.
inline std::optional<std::uint64_t> power_of_maximal(const MonomialIdeal& b) {
    if (b.is_unit()) return 0;
    const auto& gens = b.generators();
    const std::uint64_t d = one_norm(gens.front());
    for (const auto& g : gens)
        if (one_norm(g) != d) return std::nullopt;
    BigInt layer = binomial(static_cast<unsigned>(b.dim() + d - 1),
                            static_cast<unsigned>(b.dim() - 1));
    if (BigInt(gens.size()) != layer) return std::nullopt;
    return d;
}

// colength(a) >= (n+k)^n / (n! c^n), strict when n >= 2; k is the containment
// level of the multiplier ideal at scaling c.
inline CheckReport check_length_bound(const IdealAnalysis& ctx, const Rational& c) {
    CheckReport rep;
    rep.check = "length_bound";
    rep.ideal = ctx.ideal();
    rep.c = c;
    if (c <= 0) throw unsupported_input_error("check_length_bound: c must be positive");
    const int n = ctx.ideal().dim();
    auto k = ctx.level(c);
    if (!k)
        return rep.conclude(Verdict::NotApplicable,
                            "multiplier ideal at this scaling is the unit ideal");
    Rational bound = rat_pow(Rational(n + *k), static_cast<unsigned>(n)) /
                     (Rational(factorial(static_cast<unsigned>(n))) *
                      rat_pow(c, static_cast<unsigned>(n)));
    Rational length(ctx.colength());
    rep.add("k", static_cast<std::int64_t>(*k));
    rep.add("colength", detail::int_quantity(ctx.colength()));
    rep.add("bound", bound);
    if (length > bound) return rep.conclude(Verdict::Holds);
    if (length == bound) {
        if (n == 1) return rep.conclude(Verdict::HoldsWithEquality);
        return rep.conclude(Verdict::Violated,
                            "bound must be strict for n >= 2 but equality was attained");
    }
    return rep.conclude(Verdict::Violated, "colength " + to_string(length) +
                                               " falls below the bound " + to_string(bound));
}

// e(a) >= (n+k)^n / c^n with k the containment level at scaling c.
inline CheckReport check_multiplicity_bound(const IdealAnalysis& ctx, const Rational& c) {
    CheckReport rep;
    rep.check = "multiplicity_bound";
    rep.ideal = ctx.ideal();
    rep.c = c;
    if (c <= 0) throw unsupported_input_error("check_multiplicity_bound: c must be positive");
    const int n = ctx.ideal().dim();
    auto k = ctx.level(c);
    if (!k)
        return rep.conclude(Verdict::NotApplicable,
                            "multiplier ideal at this scaling is the unit ideal");
    Rational bound = rat_pow(Rational(n + *k), static_cast<unsigned>(n)) /
                     rat_pow(c, static_cast<unsigned>(n));
    Rational mult(ctx.multiplicity());
    rep.add("k", static_cast<std::int64_t>(*k));
    rep.add("multiplicity", detail::int_quantity(ctx.multiplicity()));
    rep.add("bound", bound);
    if (mult > bound) return rep.conclude(Verdict::Holds);
    if (mult == bound) return rep.conclude(Verdict::HoldsWithEquality);
    return rep.conclude(Verdict::Violated, "multiplicity " + to_string(mult) +
                                               " falls below the bound " + to_string(bound));
}

// Equality e(a) c^n = (n+k)^n happens exactly when (n+k)/c is an integer d
// and the integral closure is the d-th power of the maximal ideal; checks
// both directions.
inline CheckReport check_equality_case(const IdealAnalysis& ctx, const Rational& c) {
    CheckReport rep;
    rep.check = "equality_case";
    rep.ideal = ctx.ideal();
    rep.c = c;
    if (c <= 0) throw unsupported_input_error("check_equality_case: c must be positive");
    const int n = ctx.ideal().dim();
    auto k = ctx.level(c);
    if (!k)
        return rep.conclude(Verdict::NotApplicable,
                            "multiplier ideal at this scaling is the unit ideal");
    Rational lhs = Rational(ctx.multiplicity()) * rat_pow(c, static_cast<unsigned>(n));
    Rational rhs = rat_pow(Rational(n + *k), static_cast<unsigned>(n));
    const bool equal = lhs == rhs;
    Rational d0 = Rational(n + *k) / c;
    auto closure_power = power_of_maximal(ctx.closure());
    rep.add("k", static_cast<std::int64_t>(*k));
    rep.add("scaled_multiplicity", lhs);
    rep.add("level_power", rhs);
    rep.add("equality", equal);
    if (equal) {
        if (den(d0) != 1)
            return rep.conclude(Verdict::Violated,
                                "equality attained but (n+k)/c = " + to_string(d0) +
                                    " is not an integer");
        if (!closure_power || BigInt(*closure_power) != num(d0))
            return rep.conclude(Verdict::Violated,
                                "equality attained but the integral closure is not the "
                                "expected maximal-ideal power " +
                                    to_string(d0));
        return rep.conclude(Verdict::HoldsWithEquality);
    }
    if (closure_power && Rational(*closure_power) * c == Rational(n + *k))
        return rep.conclude(Verdict::Violated,
                            "integral closure is the maximal-ideal power matching the level "
                            "but the multiplicity is not extremal");
    return rep.conclude(Verdict::Holds);
}

// a sits inside its integral closure, which sits inside the multiplier ideal
// of a times the (n-1)-st maximal-ideal power.
inline CheckReport check_weak_inclusion(const IdealAnalysis& ctx) {
    CheckReport rep;
    rep.check = "weak_inclusion";
    rep.ideal = ctx.ideal();
    const MonomialIdeal& a = ctx.ideal();
    const int n = a.dim();
    const MonomialIdeal& closure = ctx.closure();
    for (const auto& g : a.generators())
        if (!contains(closure, g))
            return rep.conclude(Verdict::Violated,
                                "a generator of the ideal escapes its integral closure");
    MonomialIdeal mn = MonomialIdeal::maximal_power(n, static_cast<Exponent>(n - 1));
    // Facets of a Minkowski sum can come from edge-edge pairings, not just from
    // the factors' facets, so the product's dual is enumerated from scratch.
    DualNormalSet dual_prod = dual_of(product(a, mn), ctx.limits());
    rep.add("closure_generators", static_cast<std::int64_t>(closure.generators().size()));
    for (const auto& g : closure.generators()) {
        RationalVector u(n);
        for (int i = 0; i < n; ++i) u[i] = Rational(g[i]) + 1;
        if (classify(dual_prod, u, 1) != RegionClass::Interior) {
            std::string w = "closure generator (";
            for (int i = 0; i < n; ++i) w += (i ? "," : "") + std::to_string(g[i]);
            w += ") is not in the multiplier ideal of the product";
            return rep.conclude(Verdict::Violated, w);
        }
    }
    return rep.conclude(Verdict::Holds);
}

// For n <= 3 with a proper multiplier ideal J at c = 1: the integral closure
// has colength at least that of J times the (n-1)-st maximal-ideal power.
inline CheckReport check_small_dimension(const IdealAnalysis& ctx) {
    CheckReport rep;
    rep.check = "small_dimension";
    rep.ideal = ctx.ideal();
    const int n = ctx.ideal().dim();
    if (n > 3) return rep.conclude(Verdict::NotApplicable, "established only for n <= 3");
    auto k = ctx.level(1);
    if (!k) return rep.conclude(Verdict::NotApplicable, "multiplier ideal is the unit ideal");
    MonomialIdeal target = product(ctx.multiplier_at_one(),
                                   MonomialIdeal::maximal_power(n, static_cast<Exponent>(n - 1)));
    BigInt lhs = colength(ctx.closure(), ctx.limits());
    BigInt rhs = colength(target, ctx.limits());
    rep.add("k", static_cast<std::int64_t>(*k));
    rep.add("closure_colength", detail::int_quantity(lhs));
    rep.add("product_colength", detail::int_quantity(rhs));
    if (lhs > rhs) return rep.conclude(Verdict::Holds);
    if (lhs == rhs) return rep.conclude(Verdict::HoldsWithEquality);
    return rep.conclude(Verdict::Violated,
                        "closure colength falls below the product colength");
}

// Observational variant of the small-dimension comparison at n = 4, where no
// proof is known; records the outcome without ever flagging a violation.
inline CheckReport small_dimension_probe(const IdealAnalysis& ctx) {
    CheckReport rep;
    rep.check = "small_dimension_probe";
    rep.ideal = ctx.ideal();
    const int n = ctx.ideal().dim();
    if (n != 4) return rep.conclude(Verdict::NotApplicable, "probe targets n = 4");
    auto k = ctx.level(1);
    if (!k) return rep.conclude(Verdict::NotApplicable, "multiplier ideal is the unit ideal");
    MonomialIdeal target = product(ctx.multiplier_at_one(),
                                   MonomialIdeal::maximal_power(n, static_cast<Exponent>(n - 1)));
    BigInt lhs = colength(ctx.closure(), ctx.limits());
    BigInt rhs = colength(target, ctx.limits());
    rep.add("k", static_cast<std::int64_t>(*k));
    rep.add("closure_colength", detail::int_quantity(lhs));
    rep.add("product_colength", detail::int_quantity(rhs));
    rep.add("inequality_observed", lhs >= rhs);
    return rep.conclude(Verdict::NotApplicable, "observational probe, no verdict");
}

// colength(a) >= binom(2n+k-1, n) for n <= 3, k the level at c = 1.
inline CheckReport check_binomial_bound(const IdealAnalysis& ctx) {
    CheckReport rep;
    rep.check = "binomial_bound";
    rep.ideal = ctx.ideal();
    const int n = ctx.ideal().dim();
    if (n > 3) return rep.conclude(Verdict::NotApplicable, "established only for n <= 3");
    auto k = ctx.level(1);
    if (!k) return rep.conclude(Verdict::NotApplicable, "multiplier ideal is the unit ideal");
    BigInt bound = binomial(static_cast<unsigned>(2 * n + *k - 1), static_cast<unsigned>(n));
    rep.add("k", static_cast<std::int64_t>(*k));
    rep.add("colength", detail::int_quantity(ctx.colength()));
    rep.add("bound", detail::int_quantity(bound));
    if (ctx.colength() > bound) return rep.conclude(Verdict::Holds);
    if (ctx.colength() == bound) return rep.conclude(Verdict::HoldsWithEquality);
    return rep.conclude(Verdict::Violated, "colength falls below the binomial bound");
}

// Fixed three-variable example separating the inclusion picture from the
// length comparison: the ideal is not contained in J * m^2, yet the lengths
// still compare the right way.
inline CheckReport check_golden_example(const Limits& limits = {}) {
    CheckReport rep;
    rep.check = "golden_example";
    MonomialIdeal a =
        MonomialIdeal::from_generators(3, {{5, 0, 0}, {0, 4, 0}, {0, 0, 2}}, limits);
    rep.ideal = a;
    rep.c = 1;
    DualNormalSet dual = dual_normals(a, limits);
    rep.add("lct", lct(dual));
    MonomialIdeal j = multiplier_ideal(a, dual, 1, limits);
    if (j.is_unit())
        return rep.conclude(Verdict::Violated, "multiplier ideal is unexpectedly trivial");
    MonomialIdeal target = product(j, MonomialIdeal::maximal_power(3, 2));
    if (contains(target, {0, 0, 2}))
        return rep.conclude(Verdict::Violated,
                            "the pure third-axis generator should stay outside J * m^2");
    bool escapes = false;
    for (const auto& g : a.generators())
        if (!contains(target, g)) escapes = true;
    if (!escapes)
        return rep.conclude(Verdict::Violated,
                            "the ideal should not be contained in J * m^2");
    BigInt lhs = colength(a, limits);
    BigInt rhs = colength(target, limits);
    rep.add("colength", detail::int_quantity(lhs));
    rep.add("product_colength", detail::int_quantity(rhs));
    rep.add("multiplicity", detail::int_quantity(multiplicity(a, limits)));
    if (lhs < rhs)
        return rep.conclude(Verdict::Violated,
                            "colength comparison fails on the fixed example");
    return rep.conclude(Verdict::Holds);
}

inline CheckReport check_length_bound(const MonomialIdeal& a, const Rational& c,
                                      const Limits& limits = {}) {
    return check_length_bound(IdealAnalysis(a, limits), c);
}
inline CheckReport check_multiplicity_bound(const MonomialIdeal& a, const Rational& c,
                                            const Limits& limits = {}) {
    return check_multiplicity_bound(IdealAnalysis(a, limits), c);
}
inline CheckReport check_equality_case(const MonomialIdeal& a, const Rational& c,
                                       const Limits& limits = {}) {
    return check_equality_case(IdealAnalysis(a, limits), c);
}
inline CheckReport check_weak_inclusion(const MonomialIdeal& a, const Limits& limits = {}) {
    return check_weak_inclusion(IdealAnalysis(a, limits));
}
inline CheckReport check_small_dimension(const MonomialIdeal& a, const Limits& limits = {}) {
    return check_small_dimension(IdealAnalysis(a, limits));
}
inline CheckReport check_binomial_bound(const MonomialIdeal& a, const Limits& limits = {}) {
    return check_binomial_bound(IdealAnalysis(a, limits));
}

inline const std::vector<std::string>& default_check_names() {
    static const std::vector<std::string> names = {
        "length_bound",       "multiplicity_bound", "equality_case", "weak_inclusion",
        "balanced_exclusion", "small_dimension",    "binomial_bound"};
    return names;
}

inline const std::vector<std::string>& known_check_names() {
    static const std::vector<std::string> names = {
        "length_bound",   "multiplicity_bound", "equality_case",
        "weak_inclusion", "balanced_exclusion", "small_dimension",
        "binomial_bound", "golden_example",     "small_dimension_probe"};
    return names;
}

inline bool check_is_c_dependent(const std::string& name) {
    return name == "length_bound" || name == "multiplicity_bound" ||
           name == "equality_case" || name == "balanced_exclusion";
}

inline CheckReport run_named_check(const std::string& name, const IdealAnalysis& ctx,
                                   const std::optional<Rational>& c = std::nullopt) {
    if (check_is_c_dependent(name) && !c)
        throw config_error("check '" + name + "' requires a scaling factor c");
    if (name == "length_bound") return check_length_bound(ctx, *c);
    if (name == "multiplicity_bound") return check_multiplicity_bound(ctx, *c);
    if (name == "equality_case") return check_equality_case(ctx, *c);
    if (name == "balanced_exclusion")
        return check_balanced_exclusion(ctx.ideal(), ctx.dual(), *c, ctx.limits());
    if (name == "weak_inclusion") return check_weak_inclusion(ctx);
    if (name == "small_dimension") return check_small_dimension(ctx);
    if (name == "binomial_bound") return check_binomial_bound(ctx);
    if (name == "small_dimension_probe") return small_dimension_probe(ctx);
    if (name == "golden_example") return check_golden_example(ctx.limits());
    throw config_error("unknown check name: " + name);
}

// Deterministic random m-primary ideal: one pure power per axis in
// [2, max_exponent], plus up to 2n extra generators strictly inside the box.
inline MonomialIdeal random_ideal(int n, SeededRng& rng, Exponent max_exponent,
                                  const Limits& limits = {}) {
    if (n < 1) throw config_error("random_ideal: dimension must be positive");
    if (max_exponent < 2) throw config_error("random_ideal: max_exponent must be at least 2");
    std::vector<ExponentVector> gens;
    ExponentVector powers(n);
    for (int i = 0; i < n; ++i) {
        powers[i] = static_cast<Exponent>(2 + rng.below(max_exponent - 1));
        ExponentVector g(n, 0);
        g[static_cast<std::size_t>(i)] = powers[i];
        gens.push_back(std::move(g));
    }
    const std::uint64_t extra = rng.below(2 * static_cast<std::uint64_t>(n) + 1);
    for (std::uint64_t t = 0; t < extra; ++t) {
        ExponentVector g(n);
        bool zero = true;
        while (zero) {
            for (int i = 0; i < n; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<Exponent>(rng.below(powers[i]));
                if (g[static_cast<std::size_t>(i)] != 0) zero = false;
            }
        }
        gens.push_back(std::move(g));
    }
    return MonomialIdeal::from_generators(n, gens, limits);
}

struct SweepConfig {
    std::vector<int> dimensions = {2, 3};
    int ideals_per_dimension = 200;
    std::uint64_t seed = 0;
    Exponent max_exponent = 6;
    std::vector<Rational> c_values = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    std::vector<std::string> checks = default_check_names();
    int parallelism = 1;
    Limits limits;
};

struct SweepCase {
    std::string case_id;
    MonomialIdeal ideal;
    std::vector<CheckReport> reports;
};

struct SweepSkip {
    std::string case_id;
    std::string reason;
};

struct SweepSummary {
    std::int64_t holds = 0;
    std::int64_t holds_with_equality = 0;
    std::int64_t not_applicable = 0;
    std::int64_t violated = 0;
};

struct SweepResult {
    std::vector<SweepCase> cases;
    std::vector<SweepSkip> skips;
    SweepSummary summary;

    bool any_violation() const { return summary.violated > 0; }
};

namespace detail {

inline void validate_sweep_config(const SweepConfig& config) {
    if (config.dimensions.empty()) throw config_error("sweep: no dimensions selected");
    for (int n : config.dimensions)
        if (n < 1 || n > 4) throw config_error("sweep: dimensions must lie in [1, 4]");
    if (config.ideals_per_dimension < 0)
        throw config_error("sweep: ideal count must be non-negative");
    if (config.max_exponent < 2) throw config_error("sweep: max exponent must be at least 2");
    if (config.parallelism < 1) throw config_error("sweep: parallelism must be at least 1");
    for (const auto& c : config.c_values)
        if (c <= 0) throw config_error("sweep: scaling factors must be positive");
    if (config.checks.empty()) throw config_error("sweep: no checks selected");
    const auto& known = known_check_names();
    for (const auto& name : config.checks) {
        bool ok = false;
        for (const auto& k : known) ok = ok || k == name;
        if (!ok) throw config_error("sweep: unknown check name: " + name);
    }
    bool needs_c = false;
    for (const auto& name : config.checks) needs_c = needs_c || check_is_c_dependent(name);
    if (needs_c && config.c_values.empty())
        throw config_error("sweep: selected checks require at least one scaling factor");
}

} // namespace detail

inline SweepResult sweep(const SweepConfig& config) {
    detail::validate_sweep_config(config);

    struct PendingCase {
        std::string case_id;
        MonomialIdeal ideal;
        bool golden = false;
    };
    std::vector<PendingCase> pending;

    bool golden_selected = false;
    for (const auto& name : config.checks) golden_selected = golden_selected || name == "golden_example";
    if (golden_selected) {
        MonomialIdeal golden = MonomialIdeal::from_generators(
            3, {{5, 0, 0}, {0, 4, 0}, {0, 0, 2}}, config.limits);
        pending.push_back({"golden", std::move(golden), true});
    }
    for (int n : config.dimensions) {
        SeededRng rng(config.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(n));
        for (int i = 0; i < config.ideals_per_dimension; ++i) {
            MonomialIdeal a = random_ideal(n, rng, config.max_exponent, config.limits);
            pending.push_back({"n" + std::to_string(n) + "/i" + std::to_string(i),
                               std::move(a), false});
        }
    }

    struct Slot {
        std::optional<SweepCase> done;
        std::optional<SweepSkip> skipped;
    };
    std::vector<Slot> slots(pending.size());

    auto run_case = [&](std::size_t idx) {
        const PendingCase& pc = pending[idx];
        try {
            SweepCase out;
            out.case_id = pc.case_id;
            out.ideal = pc.ideal;
            if (pc.golden) {
                out.reports.push_back(check_golden_example(config.limits));
            } else {
                IdealAnalysis ctx(pc.ideal, config.limits);
                for (const auto& name : config.checks) {
                    if (name == "golden_example") continue;
                    if (check_is_c_dependent(name)) {
                        for (const auto& c : config.c_values)
                            out.reports.push_back(run_named_check(name, ctx, c));
                    } else {
                        out.reports.push_back(run_named_check(name, ctx));
                    }
                }
            }
            slots[idx].done = std::move(out);
        } catch (const resource_limit_error& e) {
            slots[idx].skipped = SweepSkip{pc.case_id, e.what()};
        }
    };

    if (config.parallelism == 1 || pending.size() < 2) {
        for (std::size_t i = 0; i < pending.size(); ++i) run_case(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= pending.size()) return;
                try {
                    run_case(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::size_t thread_count = std::min<std::size_t>(
            static_cast<std::size_t>(config.parallelism), pending.size());
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < thread_count; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    SweepResult result;
    for (auto& slot : slots) {
        if (slot.skipped) {
            result.skips.push_back(std::move(*slot.skipped));
            continue;
        }
        for (const auto& rep : slot.done->reports) {
            switch (rep.verdict) {
                case Verdict::Holds: ++result.summary.holds; break;
                case Verdict::HoldsWithEquality: ++result.summary.holds_with_equality; break;
                case Verdict::NotApplicable: ++result.summary.not_applicable; break;
                case Verdict::Violated: ++result.summary.violated; break;
            }
        }
        result.cases.push_back(std::move(*slot.done));
    }
    return result;
}

} // namespace staircase
