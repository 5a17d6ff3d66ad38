#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssm {

// Exact rational scalar. boost::multiprecision keeps the canonical form
// (gcd 1, positive denominator) after every operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Parses a plain decimal literal ("0.25", "-3", "1e-3" is not accepted)
// into the exact rational it denotes.
inline Rational rational_from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational_from_decimal: empty string");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    BigInt num = 0;
    BigInt den = 1;
    bool seen_digit = false;
    bool seen_dot = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("rational_from_decimal: two dots in " + text);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            num = num * 10 + (c - '0');
            if (seen_dot) den *= 10;
            seen_digit = true;
        } else {
            throw std::invalid_argument("rational_from_decimal: bad character in " + text);
        }
    }
    if (!seen_digit) throw std::invalid_argument("rational_from_decimal: no digits in " + text);
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

}  // namespace ssm
