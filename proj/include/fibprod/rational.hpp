#pragma once

#include <gmpxx.h>

#include <cmath>
#include <regex>
#include <string>
#include <string_view>

#include "fibprod/error.hpp"

namespace fibprod {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q" with an optional leading '-'; the result is canonical.
inline Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
    std::string s(text);
    if (!std::regex_match(s, pattern))
        throw Error(ErrorKind::parse, "malformed rational '" + s + "'");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw Error(ErrorKind::parse, "malformed rational '" + s + "'");
    if (q.get_den() == 0)
        throw Error(ErrorKind::parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rational& q) { return q.get_str(10); }

inline const Rational& min_of(const Rational& x, const Rational& y) { return y < x ? y : x; }

inline const Rational& min_of(const Rational& x, const Rational& y, const Rational& z) {
    return min_of(min_of(x, y), z);
}

// Natural log of a positive rational without overflowing double range.
inline long double log_positive(const Rational& q) {
    auto log_z = [](const mpz_class& z) {
        long exponent = 0;
        double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
        return std::log(static_cast<long double>(mantissa)) +
               static_cast<long double>(exponent) * std::log(2.0L);
    };
    return log_z(q.get_num()) - log_z(q.get_den());
}

} // namespace fibprod
