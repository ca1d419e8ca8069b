#pragma once

#include "jacring/base_expr.hpp"
#include "jacring/stability.hpp"

#include <map>
#include <string>
#include <vector>

namespace jacring {

// Divisor alphabet on the universal fine compactified Jacobian (Section 4.2):
// Theta, kappa_{0,1}, xi_i, psi_i.  xi_1 is identically zero because the
// universal bundle is trivialized along the first marking.
struct PicDivisor {
    enum class Kind { Theta, Kappa01, Xi, PsiMark };
    Kind kind = Kind::Theta;
    int marking = 0;  // for Xi / PsiMark

    bool operator<(const PicDivisor& o) const {
        if (kind != o.kind)
            return kind < o.kind;
        return marking < o.marking;
    }
    bool operator==(const PicDivisor& o) const = default;

    std::string str() const;
};

inline PicDivisor theta_div() { return {PicDivisor::Kind::Theta, 0}; }
inline PicDivisor kappa01_div() { return {PicDivisor::Kind::Kappa01, 0}; }
inline PicDivisor xi_div(int i) { return {PicDivisor::Kind::Xi, i}; }
inline PicDivisor psi_mark_div(int i) { return {PicDivisor::Kind::PsiMark, i}; }

// Strata decorating a term: the open locus, the two stable-multidegree
// strata over a two-edge vine, the subdivided vine stratum, and the
// one-edge vine strata (which additionally record the degree at w).
struct Stratum {
    enum class Kind { Open, VinePlus, VineMinus, SubdividedVine, OneEdge };
    Kind kind = Kind::Open;
    int g1 = 0;
    int w_degree = 0;  // one-edge strata only

    bool operator<(const Stratum& o) const {
        if (kind != o.kind)
            return kind < o.kind;
        if (g1 != o.g1)
            return g1 < o.g1;
        return w_degree < o.w_degree;
    }
    bool operator==(const Stratum& o) const = default;

    std::string str() const;
};

struct DecoratedTerm {
    Rational coeff = 1;
    Stratum stratum;
    std::map<PicDivisor, int> monomial;
    BaseMonomial base_factor;  // pulled back from the moduli of curves
    int edge_psi = 0;          // psi_h + psi_{h'} decoration on a vine edge

    int exponent(const PicDivisor& d) const;
    std::string str() const;
};

// perversity weight 2*#Theta + #kappa_{0,1} + sum #xi_i
int perversity(const DecoratedTerm& term);

class TautExpr {
public:
    TautExpr() = default;
    TautExpr& add(DecoratedTerm t);  // merges like terms, drops xi_1 and zeros
    friend TautExpr operator+(TautExpr a, const TautExpr& b);

    TautExpr times_kappa(const Rational& scale) const;  // multiply by scale * kappa_{0,1}

    bool is_zero() const { return terms_.empty(); }
    const std::vector<DecoratedTerm>& terms() const { return terms_; }
    std::string str() const;

private:
    std::vector<DecoratedTerm> terms_;
};

struct JustificationEntry {
    enum class Kind {
        StabilityPrune,
        DimensionPrune,
        CoefficientZero,
        PerversityVanish,
        ElidedOtherTerms,
        CatalogRule,
    };
    Kind kind;
    std::string detail;
    int g1 = -1;

    std::string str() const;
};

using JustificationLog = std::vector<JustificationEntry>;

struct PushContext {
    int g = 2;
    StabilityFamily fam;
};

// a_{g1}(phi(z)) = -(4 (2 g1)^3 / 48) (delta_{g1}(z) - 1/2)
Rational a_coeff(int g, int g1, const StabilityFamily& fam);

// Rule-catalog pushforward along pi to the 1-pointed moduli of curves.
// Terms outside the catalog raise NoRule.
BaseExpr pushforward(const TautExpr& expr, const PushContext& ctx,
                     JustificationLog* log = nullptr);

// p_* on degree-2 combinations of psi_1 and kappa_1: both push to 2g-2;
// pullback markers die.
BaseExpr forgetful_pushforward(const BaseExpr& b, int g);

// Interior part of [DR^1_g(b;a_1)]_{b^2}: (1/2)(-kappa_1 + (2g-1)^2 psi_1).
BaseExpr dr1_b2_interior(int g);

// [DR^2]_{b^4} - (1/2)([DR^1]_{b^2})^2 = sum (2 g1)^4 / 48 [Gamma_{g1}]
BaseExpr dr_combo(int g);

enum class RelationId { REL2, REL22, REL3, REL4, REL5 };

struct RelationInstance {
    RelationId id;
    TautExpr lhs;
    TautExpr rhs;
    JustificationLog log;
};

RelationInstance instantiate_relation(RelationId rel, const PushContext& ctx);

// The Section 4.6 pipeline: multiply the degree-2 relation by kappa_{0,1}/3
// and push forward its right-hand side with the catalog.  Returns
// pi_*(Theta^{g-1}/(g-1)! kappa^3/3!) as a combination of the [Gamma_{g1}],
// computed without the closed form a_coeff.
BaseExpr derive_kappa3_pushforward(const PushContext& ctx, JustificationLog* log = nullptr);

}  // namespace jacring
