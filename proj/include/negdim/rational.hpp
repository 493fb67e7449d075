#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace negdim {

// Exact unbounded rational arithmetic. boost::multiprecision keeps values
// canonical (lowest terms, positive denominator), which the symbolic layer
// relies on for equality tests.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer rational_num(const Rational& r) { return numerator(r); }
inline Integer rational_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_half_integer(const Rational& r) { return denominator(r) == 2; }

/// True for arguments on the integer/half-integer lattice the exact layer
/// supports (denominator 1 or 2).
inline bool has_denominator_at_most_two(const Rational& r) {
    return denominator(r) <= 2;
}

inline bool is_nonpositive_integer(const Rational& r) {
    return is_integer(r) && r <= 0;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
    return Rational(x);
}

inline Rational pow_rational(const Rational& base, long exponent) {
    if (exponent == 0) return Rational(1);
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("pow_rational: zero to negative power");
        return Rational(1) / pow_rational(base, -exponent);
    }
    Rational acc(1);
    Rational b = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Integer factorial_integer(long n) {
    if (n < 0) throw std::domain_error("factorial_integer: negative argument");
    Integer acc(1);
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline std::string rational_to_string(const Rational& r) {
    std::string s = rational_num(r).str();
    if (rational_den(r) != 1) s += "/" + rational_den(r).str();
    return s;
}

} // namespace negdim
