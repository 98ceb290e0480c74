#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace staircase {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

inline Rational make_rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw unsupported_input_error("rational with zero denominator");
    return Rational(n, d);
}

inline BigInt int_pow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, unsigned exp) {
    return Rational(int_pow(num(base), exp), int_pow(den(base), exp));
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Largest integer <= q.
inline BigInt rat_floor(const Rational& q) {
    BigInt n = num(q), d = den(q);
    BigInt t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

// Smallest integer >= q.
inline BigInt rat_ceil(const Rational& q) { return -rat_floor(-q); }

inline std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// Parses "P", "-P", or "P/Q" with integer P, Q. Throws parse_error on anything else.
inline Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> Rational {
        throw parse_error("bad rational '" + text + "': " + msg, i + 1);
    };
    if (text.empty()) return fail("empty");
    bool neg = false;
    if (text[i] == '-' || text[i] == '+') {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&]() -> BigInt {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("expected digit");
        BigInt v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        return v;
    };
    BigInt n = digits();
    BigInt d = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        d = digits();
        if (d == 0) fail("zero denominator");
    }
    if (i != text.size()) fail("trailing characters");
    if (neg) n = -n;
    return Rational(n, d);
}

} // namespace staircase
