#include "jacring/base_expr.hpp"

#include <sstream>

namespace jacring {

int BaseSymbol::degree() const {
    switch (kind) {
        case Kind::Psi1: return 2;
        case Kind::Kappa: return 2 * param;
        case Kind::GammaVine: return 4;
        case Kind::OneEdge: return 2;
        case Kind::DR1b2: return 2;
        case Kind::Pullback: return param;
    }
    return 0;
}

std::string BaseSymbol::str() const {
    switch (kind) {
        case Kind::Psi1: return "psi1";
        case Kind::Kappa: return "kappa" + std::to_string(param);
        case Kind::GammaVine: return "Gamma_" + std::to_string(param);
        case Kind::OneEdge: return "OneEdge_" + std::to_string(param);
        case Kind::DR1b2: return "DR1b2";
        case Kind::Pullback: return "pullback" + std::to_string(param);
    }
    return "?";
}

int degree(const BaseMonomial& m) {
    int d = 0;
    for (const auto& [s, e] : m)
        d += s.degree() * e;
    return d;
}

std::string to_string(const BaseMonomial& m) {
    if (m.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, e] : m) {
        if (!first)
            os << "*";
        first = false;
        os << s.str();
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

BaseMonomial operator*(const BaseMonomial& a, const BaseMonomial& b) {
    BaseMonomial r = a;
    for (const auto& [s, e] : b)
        r[s] += e;
    return r;
}

BaseExpr BaseExpr::term(Rational coeff, BaseMonomial m) {
    BaseExpr e;
    if (coeff != 0)
        e.terms_[std::move(m)] = std::move(coeff);
    return e;
}

BaseExpr BaseExpr::symbol(BaseSymbol s, Rational coeff) {
    return term(std::move(coeff), BaseMonomial{{s, 1}});
}

BaseExpr& BaseExpr::operator+=(const BaseExpr& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

BaseExpr& BaseExpr::operator-=(const BaseExpr& o) {
    return *this += Rational(-1) * o;
}

BaseExpr operator*(const Rational& c, BaseExpr e) {
    if (c == 0)
        return {};
    for (auto& [m, coeff] : e.terms_)
        coeff *= c;
    return e;
}

BaseExpr operator*(const BaseExpr& a, const BaseExpr& b) {
    BaseExpr r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r += BaseExpr::term(ca * cb, ma * mb);
    return r;
}

Rational BaseExpr::coefficient(const BaseMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string BaseExpr::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << to_string(c) << ")*" << to_string(m);
    }
    return os.str();
}

}  // namespace jacring
