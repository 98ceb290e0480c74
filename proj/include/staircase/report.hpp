#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monomial_ideal.hpp"
#include "rational.hpp"

namespace staircase {

enum class Verdict { Holds, HoldsWithEquality, NotApplicable, Violated };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::HoldsWithEquality: return "HoldsWithEquality";
        case Verdict::NotApplicable: return "NotApplicable";
        default: return "VIOLATED";
    }
}

using QuantityValue = std::variant<std::int64_t, Rational, double, bool, std::string>;

// One executed check: what ran, on what input, the exact quantities it
// computed, and the verdict. A Violated verdict always carries a witness.
struct CheckReport {
    std::string check;
    std::optional<MonomialIdeal> ideal;
    std::optional<Rational> c;
    std::vector<std::pair<std::string, QuantityValue>> quantities;
    Verdict verdict = Verdict::NotApplicable;
    std::string witness;

    CheckReport& add(std::string name, QuantityValue value) {
        quantities.emplace_back(std::move(name), std::move(value));
        return *this;
    }

    CheckReport& conclude(Verdict v, std::string why = {}) {
        verdict = v;
        witness = std::move(why);
        return *this;
    }
};

} // namespace staircase
