#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monomial_ideal.hpp"

// Text form of ideals:
//   ideal  := '(' mon (',' mon)* ')'
//   mon    := '1' | factor ('*'? factor)*
//   factor := var ('^' nat)?
//   var    := x | y | z | w | x1 .. x6
// Whitespace is free. Variables must come from one alphabet: either the
// letters x,y,z,w or the indexed names x1..x6, never both in one expression.
// The dimension is the highest variable index used unless overridden upward.

namespace staircase {

struct ParsedIdeal {
    MonomialIdeal ideal;
    bool minimalized = false;  // ingest dropped or merged generators
};

namespace detail {

struct ParseCursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    std::size_t here() {
        skip_ws();
        return pos + 1;  // 1-based for messages
    }
    char take(const char* expectation) {
        skip_ws();
        if (pos >= text.size())
            throw parse_error(std::string("unexpected end of input, expected ") + expectation,
                              text.size() + 1);
        return text[pos++];
    }
    void expect(char c) {
        std::size_t at = here();
        char got = take(std::string(1, c).c_str());
        if (got != c)
            throw parse_error(std::string("expected '") + c + "' but found '" + got + "'", at);
    }
};

struct SparseMonomial {
    std::vector<std::pair<int, std::uint64_t>> factors;  // 1-based variable index, exponent
};

inline bool starts_variable(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }

inline std::uint64_t parse_nat(ParseCursor& cur, const Limits& limits) {
    std::size_t at = cur.here();
    char c = cur.take("a number");
    if (!std::isdigit(static_cast<unsigned char>(c)))
        throw parse_error("expected a number", at);
    std::uint64_t value = static_cast<std::uint64_t>(c - '0');
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(cur.text[cur.pos] - '0');
        ++cur.pos;
        if (value > limits.max_exponent)
            throw parse_error("exponent exceeds the supported maximum of " +
                                  std::to_string(limits.max_exponent),
                              at);
    }
    return value;
}

// Returns the 1-based variable index; sets the alphabet flags.
inline int parse_variable(ParseCursor& cur, bool& saw_letters, bool& saw_indexed) {
    std::size_t at = cur.here();
    char c = cur.take("a variable");
    if (!starts_variable(c)) throw parse_error("expected a variable", at);
    if (c == 'x' && cur.pos < cur.text.size() &&
        std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        std::size_t digit_at = cur.pos + 1;
        std::uint64_t idx = 0;
        int digits = 0;
        while (cur.pos < cur.text.size() &&
               std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
            idx = idx * 10 + static_cast<std::uint64_t>(cur.text[cur.pos] - '0');
            ++cur.pos;
            if (++digits > 2) break;
        }
        if (idx < 1 || idx > 6)
            throw parse_error("variable index must lie in x1..x6", digit_at);
        saw_indexed = true;
        if (saw_letters)
            throw parse_error("mixed variable alphabets: use x,y,z,w or x1..x6, not both", at);
        return static_cast<int>(idx);
    }
    saw_letters = true;
    if (saw_indexed)
        throw parse_error("mixed variable alphabets: use x,y,z,w or x1..x6, not both", at);
    switch (c) {
        case 'x': return 1;
        case 'y': return 2;
        case 'z': return 3;
        default: return 4;  // 'w'
    }
}

inline SparseMonomial parse_monomial(ParseCursor& cur, const Limits& limits, bool& saw_letters,
                                     bool& saw_indexed) {
    SparseMonomial mon;
    if (cur.peek() == '1') {
        cur.take("'1'");
        return mon;
    }
    for (;;) {
        std::size_t at = cur.here();
        if (!starts_variable(cur.peek()))
            throw parse_error("expected a variable", at);
        int var = parse_variable(cur, saw_letters, saw_indexed);
        std::uint64_t exp = 1;
        if (cur.peek() == '^') {
            cur.take("'^'");
            exp = parse_nat(cur, limits);
        }
        mon.factors.emplace_back(var, exp);
        char next = cur.peek();
        if (next == '*') {
            cur.take("'*'");
            continue;  // a factor must follow
        }
        if (starts_variable(next)) continue;  // juxtaposition
        break;
    }
    return mon;
}

} // namespace detail

// Parses the textual ideal form. dim_override of 0 means "infer"; a positive
// override must cover every variable used.
inline ParsedIdeal parse_ideal(const std::string& text, int dim_override = 0,
                               const Limits& limits = {}) {
    detail::ParseCursor cur{text};
    cur.expect('(');
    std::vector<detail::SparseMonomial> monomials;
    bool saw_letters = false, saw_indexed = false;
    for (;;) {
        monomials.push_back(detail::parse_monomial(cur, limits, saw_letters, saw_indexed));
        char next = cur.peek();
        if (next == ',') {
            cur.take("','");
            continue;
        }
        break;
    }
    cur.expect(')');
    if (!cur.at_end())
        throw parse_error("trailing input after the closing parenthesis", cur.here());

    int inferred = 0;
    for (const auto& mon : monomials)
        for (const auto& [var, exp] : mon.factors) inferred = std::max(inferred, var);
    if (inferred == 0) inferred = 1;  // only the monomial 1 appeared
    int dim = inferred;
    if (dim_override != 0) {
        if (dim_override < 0) throw config_error("dimension override must be positive");
        if (dim_override < inferred)
            throw config_error("dimension override " + std::to_string(dim_override) +
                               " is below the highest variable index " +
                               std::to_string(inferred));
        dim = dim_override;
    }

    std::vector<ExponentVector> gens;
    gens.reserve(monomials.size());
    for (const auto& mon : monomials) {
        std::vector<std::uint64_t> wide(static_cast<std::size_t>(dim), 0);
        for (const auto& [var, exp] : mon.factors) {
            wide[static_cast<std::size_t>(var - 1)] += exp;
            if (wide[static_cast<std::size_t>(var - 1)] > limits.max_exponent)
                throw parse_error("total exponent exceeds the supported maximum of " +
                                      std::to_string(limits.max_exponent),
                                  1);
        }
        ExponentVector g(static_cast<std::size_t>(dim));
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<Exponent>(wide[i]);
        gens.push_back(std::move(g));
    }

    ParsedIdeal out{MonomialIdeal::from_generators(dim, gens, limits), false};
    std::vector<ExponentVector> before = gens;
    std::vector<ExponentVector> after = out.ideal.generators();
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    out.minimalized = before != after;
    return out;
}

inline std::string variable_name(int index_zero_based, int dim) {
    if (dim <= 4) return std::string(1, "xyzw"[index_zero_based]);
    return "x" + std::to_string(index_zero_based + 1);
}

inline std::string format_monomial(const ExponentVector& g, int dim) {
    std::string out;
    for (int i = 0; i < dim; ++i) {
        Exponent e = g[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += variable_name(i, dim);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

inline std::string format_ideal(const MonomialIdeal& a) {
    std::string out = "(";
    const auto& gens = a.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += format_monomial(gens[i], a.dim());
    }
    out += ")";
    return out;
}

} // namespace staircase
