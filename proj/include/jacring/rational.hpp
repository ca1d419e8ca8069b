#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace jacring {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

// Canonical rendering "p/q" with q > 0 and gcd(p,q) = 1; integers render bare.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

// floor(r) as an exact integer (rounds toward -inf, unlike integer division).
inline Integer floor_rational(const Rational& r) {
    Integer q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r))
        --q;
    return q;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// (2n-1)!! with the usual conventions (-1)!! = 1!! = 1.
inline Integer odd_double_factorial(long long n) {
    Integer f = 1;
    for (long long k = n; k >= 1; k -= 2)
        f *= k;
    return f;
}

}  // namespace jacring
