#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace finitary {

using Rational = boost::multiprecision::cpp_rational;
using BigInt   = boost::multiprecision::cpp_int;

/// Parses "2", "-3/4" or a decimal like "0.6" into an exact rational.
/// Decimal text is read digit-by-digit, so "0.6" is exactly 3/5 (never a
/// binary double).
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&]() -> BigInt {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
        BigInt value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        return value;
    };
    BigInt numerator = read_digits();
    BigInt denominator = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        denominator = read_digits();
        if (denominator == 0) fail();
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            numerator = numerator * 10 + (text[pos] - '0');
            denominator *= 10;
            ++pos;
        }
    }
    skip_ws();
    if (pos != text.size()) fail();
    Rational result(numerator, denominator);
    return negative ? -result : result;
}

/// "3/5" for proper fractions, plain "2" for integers.
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace finitary
