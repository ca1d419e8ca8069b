#pragma once

#include "jacring/rational.hpp"

#include <string>

namespace jacring {

/*
 * Exact numbers of the form a + b*eps where eps is a formal positive
 * infinitesimal (0 < eps << 1/(g-1)).  Order is lexicographic:
 *
 *     a + b*eps < a' + b'*eps  iff  a < a', or a = a' and b < b'.
 *
 * floor(a + b*eps) is floor(a) for a not an integer; for integral a it is
 * a when b >= 0 and a - 1 when b < 0.  This makes the generic-epsilon
 * tie-breaking of stability walls literal instead of approximate.
 */
struct EpsRational {
    Rational a;  // rational part
    Rational b;  // coefficient of eps

    EpsRational() = default;
    EpsRational(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

    friend bool operator==(const EpsRational& x, const EpsRational& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const EpsRational& x, const EpsRational& y) { return !(x == y); }
    friend bool operator<(const EpsRational& x, const EpsRational& y) {
        return x.a < y.a || (x.a == y.a && x.b < y.b);
    }
    friend bool operator<=(const EpsRational& x, const EpsRational& y) { return !(y < x); }
    friend bool operator>(const EpsRational& x, const EpsRational& y) { return y < x; }
    friend bool operator>=(const EpsRational& x, const EpsRational& y) { return !(x < y); }

    friend EpsRational operator+(const EpsRational& x, const EpsRational& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend EpsRational operator-(const EpsRational& x, const EpsRational& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend EpsRational operator-(const EpsRational& x) { return {-x.a, -x.b}; }
    friend EpsRational operator*(const Rational& c, const EpsRational& x) {
        return {c * x.a, c * x.b};
    }

    bool is_zero() const { return a == 0 && b == 0; }

    Integer floor() const {
        if (!is_integer(a))
            return floor_rational(a);
        return b >= 0 ? numerator(a) : numerator(a) - 1;
    }

    std::string str() const { return to_string(a) + "+" + to_string(b) + "*eps"; }
};

inline EpsRational abs(const EpsRational& x) {
    return x < EpsRational{0, 0} ? -x : x;
}

}  // namespace jacring
