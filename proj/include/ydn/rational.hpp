#pragma once

// Exact rational coefficients.  All symbolic identities in the trace and
// algebra modules must hold exactly, so coefficients are arbitrary-precision
// rationals (boost::multiprecision); floats appear only at evaluation time.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ydn/errors.hpp"

namespace ydn {

using BigInt = boost::multiprecision::cpp_int;

// cpp_rational keeps the invariants we need: always reduced, denominator
// positive, zero stored canonically as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

// "num/den" (the "/den" part omitted when den == 1), as used in Poly JSON.
inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ParseError(0, "bad rational literal '" + s + "'");
    }
}

} // namespace ydn
