#pragma once

#include "jacring/rational.hpp"

#include <map>
#include <string>

namespace jacring {

// Symbols spanning the base classes in scope on the moduli of stable curves:
// psi_1 and kappa_a on the 1-pointed space, the two-edge vine classes
// Gamma_{g1}, the one-edge (separating) vine divisors, the opaque class
// [DR^1_g(b;a_1)]_{b^2}, and a generic pullback marker used by the
// forgetful-pushforward tests.
struct BaseSymbol {
    enum class Kind { Psi1, Kappa, GammaVine, OneEdge, DR1b2, Pullback };
    Kind kind = Kind::Psi1;
    int param = 0;  // kappa index, vine genus, or pullback degree

    bool operator<(const BaseSymbol& o) const {
        if (kind != o.kind)
            return kind < o.kind;
        return param < o.param;
    }
    bool operator==(const BaseSymbol& o) const { return kind == o.kind && param == o.param; }

    int degree() const;
    std::string str() const;
};

using BaseMonomial = std::map<BaseSymbol, int>;  // symbol -> exponent > 0

int degree(const BaseMonomial& m);
std::string to_string(const BaseMonomial& m);
BaseMonomial operator*(const BaseMonomial& a, const BaseMonomial& b);

// Q-linear combination of base monomials; zero coefficients are erased so
// the zero expression has empty support.
class BaseExpr {
public:
    BaseExpr() = default;
    static BaseExpr term(Rational coeff, BaseMonomial m = {});
    static BaseExpr symbol(BaseSymbol s, Rational coeff = 1);

    BaseExpr& operator+=(const BaseExpr& o);
    BaseExpr& operator-=(const BaseExpr& o);
    friend BaseExpr operator+(BaseExpr a, const BaseExpr& b) { return a += b; }
    friend BaseExpr operator-(BaseExpr a, const BaseExpr& b) { return a -= b; }
    friend BaseExpr operator*(const Rational& c, BaseExpr e);
    friend BaseExpr operator*(const BaseExpr& a, const BaseExpr& b);
    bool operator==(const BaseExpr& o) const { return terms_ == o.terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const BaseMonomial& m) const;
    const std::map<BaseMonomial, Rational>& terms() const { return terms_; }

    std::string str() const;

private:
    std::map<BaseMonomial, Rational> terms_;
};

inline BaseSymbol psi1_symbol() { return {BaseSymbol::Kind::Psi1, 0}; }
inline BaseSymbol kappa_symbol(int a) { return {BaseSymbol::Kind::Kappa, a}; }
inline BaseSymbol gamma_symbol(int g1) { return {BaseSymbol::Kind::GammaVine, g1}; }
inline BaseSymbol one_edge_symbol(int g1) { return {BaseSymbol::Kind::OneEdge, g1}; }
inline BaseSymbol dr1b2_symbol() { return {BaseSymbol::Kind::DR1b2, 0}; }
inline BaseSymbol pullback_symbol(int deg) { return {BaseSymbol::Kind::Pullback, deg}; }

}  // namespace jacring
