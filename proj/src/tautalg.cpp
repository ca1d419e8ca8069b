#include "jacring/tautalg.hpp"

#include "jacring/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace jacring {

std::string PicDivisor::str() const {
    switch (kind) {
        case Kind::Theta: return "T";
        case Kind::Kappa01: return "K";
        case Kind::Xi: return "xi" + std::to_string(marking);
        case Kind::PsiMark: return "psi" + std::to_string(marking);
    }
    return "?";
}

std::string Stratum::str() const {
    switch (kind) {
        case Kind::Open: return "open";
        case Kind::VinePlus: return "Gamma_" + std::to_string(g1) + "^+";
        case Kind::VineMinus: return "Gamma_" + std::to_string(g1) + "^-";
        case Kind::SubdividedVine: return "Gamma_" + std::to_string(g1) + "'";
        case Kind::OneEdge:
            return "OneEdge_" + std::to_string(g1) + "(d=" + std::to_string(w_degree) + ")";
    }
    return "?";
}

int DecoratedTerm::exponent(const PicDivisor& d) const {
    auto it = monomial.find(d);
    return it == monomial.end() ? 0 : it->second;
}

std::string DecoratedTerm::str() const {
    std::ostringstream os;
    os << "(" << to_string(coeff) << ")";
    for (const auto& [d, e] : monomial) {
        os << "*" << d.str();
        if (e != 1)
            os << "^" << e;
    }
    if (stratum.kind != Stratum::Kind::Open)
        os << "*[" << stratum.str() << "]";
    if (edge_psi)
        os << "*edgepsi^" << edge_psi;
    if (!base_factor.empty())
        os << "*pi^*(" << to_string(base_factor) << ")";
    return os.str();
}

int perversity(const DecoratedTerm& term) {
    int p = 0;
    for (const auto& [d, e] : term.monomial) {
        if (d.kind == PicDivisor::Kind::Theta)
            p += 2 * e;
        else if (d.kind == PicDivisor::Kind::Kappa01 || d.kind == PicDivisor::Kind::Xi)
            p += e;
    }
    return p;
}

TautExpr& TautExpr::add(DecoratedTerm t) {
    if (t.coeff == 0)
        return *this;
    // xi_1 = 0: the universal bundle is trivialized along the first marking
    for (const auto& [d, e] : t.monomial)
        if (d.kind == PicDivisor::Kind::Xi && d.marking == 1 && e > 0)
            return *this;
    for (auto it = t.monomial.begin(); it != t.monomial.end();)
        it = it->second == 0 ? t.monomial.erase(it) : std::next(it);
    for (auto& existing : terms_) {
        if (existing.stratum == t.stratum && existing.monomial == t.monomial &&
            existing.base_factor == t.base_factor && existing.edge_psi == t.edge_psi) {
            existing.coeff += t.coeff;
            if (existing.coeff == 0)
                terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                            [](const DecoratedTerm& x) { return x.coeff == 0; }),
                             terms_.end());
            return *this;
        }
    }
    terms_.push_back(std::move(t));
    return *this;
}

TautExpr operator+(TautExpr a, const TautExpr& b) {
    for (const auto& t : b.terms())
        a.add(t);
    return a;
}

TautExpr TautExpr::times_kappa(const Rational& scale) const {
    TautExpr r;
    for (DecoratedTerm t : terms_) {
        t.coeff *= scale;
        t.monomial[kappa01_div()] += 1;
        r.add(std::move(t));
    }
    return r;
}

std::string TautExpr::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            os << " + ";
        os << terms_[i].str();
    }
    return os.str();
}

std::string JustificationEntry::str() const {
    const char* k = "";
    switch (kind) {
        case Kind::StabilityPrune: k = "StabilityPrune"; break;
        case Kind::DimensionPrune: k = "DimensionPrune"; break;
        case Kind::CoefficientZero: k = "CoefficientZero"; break;
        case Kind::PerversityVanish: k = "PerversityVanish"; break;
        case Kind::ElidedOtherTerms: k = "ElidedOtherTerms"; break;
        case Kind::CatalogRule: k = "CatalogRule"; break;
    }
    std::string s = k;
    if (g1 >= 0)
        s += "[g1=" + std::to_string(g1) + "]";
    return s + ": " + detail;
}

Rational a_coeff(int g, int g1, const StabilityFamily& fam) {
    if (g1 < 1 || g1 > g - 1)
        throw OutOfRange("a_coeff needs 1 <= g1 <= g-1");
    Rational cube(Integer(2 * g1) * Integer(2 * g1) * Integer(2 * g1));
    Rational delta(delta_g1(fam, g1));
    return Rational(-4, 48) * cube * (delta - Rational(1, 2));
}

namespace {

void log_push(JustificationLog* log, JustificationEntry e) {
    if (log)
        log->push_back(std::move(e));
}

bool monomial_is_theta_kappa(const DecoratedTerm& t, int* theta, int* kappa) {
    *theta = 0;
    *kappa = 0;
    for (const auto& [d, e] : t.monomial) {
        if (d.kind == PicDivisor::Kind::Theta)
            *theta = e;
        else if (d.kind == PicDivisor::Kind::Kappa01)
            *kappa = e;
        else if (d.kind == PicDivisor::Kind::PsiMark && d.marking == 1)
            continue;  // handled by the projection formula
        else
            return false;
    }
    return true;
}

}  // namespace

BaseExpr pushforward(const TautExpr& expr, const PushContext& ctx, JustificationLog* log) {
    const int g = ctx.g;
    BaseExpr out;
    for (const auto& term : expr.terms()) {
        // psi_1 on the Jacobian is pulled back from the base; move it into
        // the base factor first (projection formula).
        BaseMonomial base = term.base_factor;
        int psi1 = term.exponent(psi_mark_div(1));
        if (psi1 > 0)
            base[psi1_symbol()] += psi1;
        BaseExpr beta = BaseExpr::term(term.coeff, base);

        int theta = 0, kappa = 0;
        if (!monomial_is_theta_kappa(term, &theta, &kappa))
            throw NoRule("monomial outside the Theta/kappa catalog: " + term.str());

        switch (term.stratum.kind) {
            case Stratum::Kind::Open: {
                int p = 2 * theta + kappa;
                if (p <= 2 * g - 1) {
                    log_push(log, {JustificationEntry::Kind::PerversityVanish,
                                   "perversity " + std::to_string(p) + " <= 2g-1: " + term.str()});
                    continue;
                }
                if (theta == g && kappa == 0) {
                    out += Rational(factorial(static_cast<unsigned>(g))) * beta;
                    log_push(log, {JustificationEntry::Kind::CatalogRule,
                                   "Theta^g -> g! : " + term.str()});
                } else if (theta == g && kappa == 1) {
                    log_push(log, {JustificationEntry::Kind::CatalogRule,
                                   "Theta^g kappa -> 0 : " + term.str()});
                } else if (theta == g - 1 && kappa == 2) {
                    out += Rational(-2 * factorial(static_cast<unsigned>(g - 1))) *
                           (beta * BaseExpr::symbol(dr1b2_symbol()));
                    log_push(log, {JustificationEntry::Kind::CatalogRule,
                                   "Theta^{g-1} kappa^2 -> -2(g-1)! DR1b2 : " + term.str()});
                } else if (theta == g - 1 && kappa == 3) {
                    BaseExpr gamma_sum;
                    for (int g1 = 1; g1 <= g - 1; ++g1)
                        gamma_sum += BaseExpr::symbol(gamma_symbol(g1), a_coeff(g, g1, ctx.fam));
                    out += Rational(6 * factorial(static_cast<unsigned>(g - 1))) *
                           (beta * gamma_sum);
                    log_push(log, {JustificationEntry::Kind::CatalogRule,
                                   "Theta^{g-1} kappa^3 -> 3!(g-1)! sum a_{g1} Gamma : " +
                                       term.str()});
                } else {
                    throw NoRule("open-stratum monomial outside the catalog: " + term.str());
                }
                break;
            }
            case Stratum::Kind::VinePlus:
            case Stratum::Kind::VineMinus: {
                bool plus = term.stratum.kind == Stratum::Kind::VinePlus;
                int g1 = term.stratum.g1;
                if (term.edge_psi > 0) {
                    // psi-decorated vine terms of the degree-2 relation:
                    // the pushforward target degree is below the stratum
                    // codimension.
                    log_push(log, {JustificationEntry::Kind::DimensionPrune,
                                   "psi-decorated vine term: " + term.str(), g1});
                    continue;
                }
                if (theta == g - 1 && kappa == 1) {
                    Rational f = Rational(factorial(static_cast<unsigned>(g - 1))) *
                                 Rational(plus ? 2 * g1 : -2 * g1);
                    out += f * (beta * BaseExpr::symbol(gamma_symbol(g1)));
                    log_push(log, {JustificationEntry::Kind::CatalogRule,
                                   "Theta^{g-1} kappa [Gamma^"
                                   + std::string(plus ? "+" : "-") + "] -> "
                                   + std::string(plus ? "+" : "-") + "2g1 (g-1)! Gamma : " +
                                       term.str(),
                                   g1});
                } else if (theta == g - 2 && kappa == 2) {
                    log_push(log, {JustificationEntry::Kind::CatalogRule,
                                   "Theta^{g-2} kappa^2 [Gamma^+-] -> 0 : " + term.str(), g1});
                } else if (theta == g - 1 && kappa == 0) {
                    log_push(log, {JustificationEntry::Kind::DimensionPrune,
                                   "Theta^{g-1} [Gamma^+-] pushes below the stratum "
                                   "codimension: " +
                                       term.str(),
                                   g1});
                } else {
                    throw NoRule("vine-stratum monomial outside the catalog: " + term.str());
                }
                break;
            }
            default:
                throw NoRule("stratum outside the catalog: " + term.str());
        }
    }
    return out;
}

BaseExpr forgetful_pushforward(const BaseExpr& b, int g) {
    BaseExpr out;
    for (const auto& [m, c] : b.terms()) {
        if (m.empty())
            throw Unsupported("forgetful pushforward expects degree-2 classes");
        if (m.size() != 1 || m.begin()->second != 1)
            throw Unsupported("forgetful pushforward expects degree-2 classes: " + to_string(m));
        const BaseSymbol& s = m.begin()->first;
        if (s == psi1_symbol() || s == kappa_symbol(1)) {
            out += BaseExpr::term(c * Rational(2 * g - 2));
        } else if (s.kind == BaseSymbol::Kind::Pullback) {
            // p_* p^* = 0 on divisors (fiber dimension 1)
        } else {
            throw Unsupported("forgetful pushforward: unsupported symbol " + s.str());
        }
    }
    return out;
}

BaseExpr dr1_b2_interior(int g) {
    if (g < 2)
        throw OutOfRange("dr1_b2_interior needs g >= 2");
    Rational sq(Integer(2 * g - 1) * Integer(2 * g - 1));
    return BaseExpr::symbol(kappa_symbol(1), Rational(-1, 2)) +
           BaseExpr::symbol(psi1_symbol(), sq / 2);
}

BaseExpr dr_combo(int g) {
    if (g < 2)
        throw OutOfRange("dr_combo needs g >= 2");
    BaseExpr e;
    for (int g1 = 1; g1 <= g - 1; ++g1) {
        Integer t = Integer(2 * g1);
        e += BaseExpr::symbol(gamma_symbol(g1), Rational(t * t * t * t) / 48);
    }
    return e;
}

namespace {

// kappa~_1 of the weight-2g relation: (1/2)(-kappa_1 + (2g-1)^2 psi_1
//   - sum_{g1,g2>=1} (2g1-1)^2 [one-edge vine g1]), a base class.
std::vector<std::pair<Rational, BaseMonomial>> kappa_tilde_1(int g) {
    std::vector<std::pair<Rational, BaseMonomial>> parts;
    parts.emplace_back(Rational(-1, 2), BaseMonomial{{kappa_symbol(1), 1}});
    parts.emplace_back(Rational(Integer(2 * g - 1) * Integer(2 * g - 1)) / 2,
                       BaseMonomial{{psi1_symbol(), 1}});
    for (int g1 = 1; g1 <= g - 1; ++g1) {
        Rational c = Rational(Integer(2 * g1 - 1) * Integer(2 * g1 - 1)) * Rational(-1, 2);
        parts.emplace_back(c, BaseMonomial{{one_edge_symbol(g1), 1}});
    }
    return parts;
}

void require_family(const PushContext& ctx) {
    if (ctx.fam.g != ctx.g)
        throw InvalidInput("context genus does not match the stability family");
    if (!is_nondegenerate(ctx.fam) || !is_semismall(ctx.fam))
        throw DegenerateFamily("relation instantiation needs a nondegenerate semismall family");
}

// The two surviving vine multidegrees of the degree-2 relation carry
// v-degrees delta-1 and delta (equivalently w-degrees 1-delta and -delta);
// VinePlus is the first.  This offset, rather than (delta, delta+1), is
// what reproduces the published a_{g1}(phi(z)) through the 2g1-rule.
struct VineStrata {
    int d_plus;   // w-degree on VinePlus
    int d_minus;  // w-degree on VineMinus
};

VineStrata stable_vine_strata(const PushContext& ctx, int g1) {
    int delta = static_cast<int>(delta_g1(ctx.fam, g1));
    return {1 - delta, -delta};
}

DecoratedTerm open_term(Rational coeff, int theta, int kappa) {
    DecoratedTerm t;
    t.coeff = std::move(coeff);
    if (theta)
        t.monomial[theta_div()] = theta;
    if (kappa)
        t.monomial[kappa01_div()] = kappa;
    return t;
}

DecoratedTerm vine_term(Rational coeff, int theta, int kappa, Stratum::Kind kind, int g1,
                        int edge_psi = 0) {
    DecoratedTerm t = open_term(std::move(coeff), theta, kappa);
    t.stratum.kind = kind;
    t.stratum.g1 = g1;
    t.edge_psi = edge_psi;
    return t;
}

void instantiate_vine_sum(const PushContext& ctx, TautExpr& rhs, JustificationLog& log,
                          int theta, int kappa, int edge_psi, const char* term_name,
                          const std::function<Rational(int d, int g1)>& coeff_of) {
    const int g = ctx.g;
    Rational theta_norm(Integer(1), factorial(static_cast<unsigned>(theta)));
    for (int g1 = 0; g1 <= g - 1; ++g1) {
        if (g1 == 0) {
            log.push_back({JustificationEntry::Kind::CoefficientZero,
                           std::string(term_name) + ": coefficient is a multiple of g1", 0});
            continue;
        }
        log.push_back({JustificationEntry::Kind::StabilityPrune,
                       std::string(term_name) + ": multidegree sum restricted to the two "
                                                "phi(z)-stable strata on Gamma_" +
                           std::to_string(g1),
                       g1});
        VineStrata vs = stable_vine_strata(ctx, g1);
        struct Piece {
            int d;
            Stratum::Kind kind;
        };
        for (const Piece& p : {Piece{vs.d_plus, Stratum::Kind::VinePlus},
                               Piece{vs.d_minus, Stratum::Kind::VineMinus}}) {
            Rational c = coeff_of(p.d, g1);
            if (c == 0) {
                log.push_back({JustificationEntry::Kind::CoefficientZero,
                               std::string(term_name) + ": degree factor vanishes at d=" +
                                   std::to_string(p.d),
                               g1});
                continue;
            }
            rhs.add(vine_term(theta_norm * c, theta, kappa, p.kind, g1, edge_psi));
        }
    }
}

}  // namespace

RelationInstance instantiate_relation(RelationId rel, const PushContext& ctx) {
    require_family(ctx);
    const int g = ctx.g;
    RelationInstance inst;
    inst.id = rel;
    Rational gfact(factorial(static_cast<unsigned>(g)));

    switch (rel) {
        case RelationId::REL2: {
            inst.lhs.add(open_term(1 / gfact, g, 1));
            // one-edge sum: the stability condition forces d = d' = 0 and the
            // coefficient d(2g1-1) vanishes with it
            for (int g1 = 1; g1 <= g - 1; ++g1) {
                inst.log.push_back({JustificationEntry::Kind::StabilityPrune,
                                    "one-edge sum: semismallness forces d = d' = 0 on the "
                                    "separating vine",
                                    g1});
                inst.log.push_back({JustificationEntry::Kind::CoefficientZero,
                                    "one-edge sum: coefficient d(2g1-1) vanishes at d = 0", g1});
            }
            instantiate_vine_sum(ctx, inst.rhs, inst.log, g - 1, 0, 0, "two-edge sum",
                                 [](int d, int g1) {
                                     Rational dd(d);
                                     return dd * dd * dd * Rational(g1) / 6;
                                 });
            inst.log.push_back({JustificationEntry::Kind::ElidedOtherTerms, "REL2"});
            break;
        }
        case RelationId::REL22: {
            inst.lhs.add(open_term(Rational(Integer(1),
                                            factorial(static_cast<unsigned>(g - 1)) * 2),
                                   g - 1, 2));
            for (const auto& [c, m] : kappa_tilde_1(g)) {
                DecoratedTerm t = open_term(Rational(-1) / gfact * c, g, 0);
                t.base_factor = m;
                inst.rhs.add(std::move(t));
            }
            instantiate_vine_sum(ctx, inst.rhs, inst.log, g - 1, 0, 0, "second term",
                                 [](int d, int g1) {
                                     Rational dd(d);
                                     Rational sq(Integer(2 * g1) * Integer(2 * g1));
                                     return Rational(6) * dd * dd * sq / 48;
                                 });
            if (g >= 2) {
                instantiate_vine_sum(ctx, inst.rhs, inst.log, g - 2, 1, 0, "third term",
                                     [](int d, int g1) {
                                         Rational dd(d);
                                         return dd * dd * dd * Rational(2 * g1) / 12;
                                     });
                instantiate_vine_sum(ctx, inst.rhs, inst.log, g - 2, 0, 1, "fourth term",
                                     [](int d, int g1) {
                                         Rational dd(d);
                                         Rational sq(Integer(2 * g1) * Integer(2 * g1));
                                         return dd * dd * dd * dd * sq / 32;
                                     });
            }
            inst.log.push_back({JustificationEntry::Kind::ElidedOtherTerms, "REL22"});
            break;
        }
        case RelationId::REL3: {
            inst.lhs.add(open_term(1 / gfact, g, 1));
            DecoratedTerm xi;
            xi = open_term(Rational(2 * g) / gfact, g, 0);
            xi.monomial[xi_div(2)] = 1;
            inst.rhs.add(std::move(xi));
            inst.log.push_back({JustificationEntry::Kind::CoefficientZero,
                                "psi_2 term: coefficient 2gd vanishes at d = 0"});
            for (int g1 = 1; g1 <= g - 1; ++g1) {
                inst.log.push_back({JustificationEntry::Kind::StabilityPrune,
                                    "one-edge sum: semismallness forces e = e' = 0", g1});
                inst.log.push_back({JustificationEntry::Kind::CoefficientZero,
                                    "one-edge sum: coefficient -2g1 e vanishes at e = 0", g1});
            }
            inst.log.push_back({JustificationEntry::Kind::ElidedOtherTerms, "REL3"});
            break;
        }
        case RelationId::REL4: {
            // xi_1 = 0, so the left side is Theta^g xi_2 / g!
            DecoratedTerm lhs = open_term(1 / gfact, g, 0);
            lhs.monomial[xi_div(2)] = 1;
            inst.lhs.add(std::move(lhs));
            for (int g1 = 1; g1 <= g - 1; ++g1) {
                inst.log.push_back({JustificationEntry::Kind::StabilityPrune,
                                    "vine sums: semismallness forces e = e' = 0", g1});
                inst.log.push_back({JustificationEntry::Kind::CoefficientZero,
                                    "vine sums: coefficients e and d-e vanish at d = e = 0", g1});
            }
            inst.log.push_back({JustificationEntry::Kind::ElidedOtherTerms, "REL4"});
            break;
        }
        case RelationId::REL5: {
            inst.lhs.add(open_term(Rational(Integer(1),
                                            factorial(static_cast<unsigned>(g + 1))),
                                   g + 1, 0));
            inst.log.push_back({JustificationEntry::Kind::CoefficientZero,
                                "right side: d xi_2 + d^2/2 psi_2 vanishes at d = 0"});
            inst.log.push_back({JustificationEntry::Kind::ElidedOtherTerms, "REL5"});
            break;
        }
        default:
            throw UnsupportedRelation("unknown relation id");
    }
    return inst;
}

BaseExpr derive_kappa3_pushforward(const PushContext& ctx, JustificationLog* log) {
    if (ctx.g < 2)
        throw OutOfRange("derive_kappa3_pushforward needs g >= 2");
    RelationInstance inst = instantiate_relation(RelationId::REL22, ctx);
    if (log)
        *log = inst.log;
    TautExpr rhs = inst.rhs.times_kappa(Rational(1, 3));
    return pushforward(rhs, ctx, log);
}

}  // namespace jacring
