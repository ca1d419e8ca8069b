#include "jacring/obstruct.hpp"

#include "jacring/errors.hpp"
#include "jacring/tautalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace jacring {

namespace {

std::string monomial_str(const Rational& c, const std::string& var) {
    if (c == 1)
        return var;
    if (c == -1)
        return "-" + var;
    return to_string(c) + "*" + var;
}

}  // namespace

std::string Constraint::str() const {
    // t*(delta-1/2) = t^2*(delta'-1/2) - 8*g1*b
    std::ostringstream os;
    os << monomial_str(lhs_t, "t") << " = " << monomial_str(rhs_t2, "t^2");
    if (rhs_b < 0)
        os << " - " << monomial_str(-rhs_b, "b");
    else
        os << " + " << monomial_str(rhs_b, "b");
    return os.str();
}

std::vector<Integer> delta_profile(int g, long long z) {
    if (g < 2)
        throw OutOfRange("delta_profile needs g >= 2");
    StabilityFamily fam{g, z};
    std::vector<Integer> out;
    for (int g1 = 1; g1 <= g - 1; ++g1)
        out.push_back(delta_g1(fam, g1));
    return out;
}

ConstraintSystem build_system(int g, long long z, long long z_prime) {
    if (g < 2)
        throw OutOfRange("build_system needs g >= 2");
    ConstraintSystem sys;
    sys.g = g;
    sys.z = z;
    sys.z_prime = z_prime;
    StabilityFamily fam{g, z}, fam_prime{g, z_prime};
    for (int g1 = 1; g1 <= g - 1; ++g1) {
        Constraint c;
        c.g1 = g1;
        c.lhs_t = Rational(delta_g1(fam, g1)) - Rational(1, 2);
        c.rhs_t2 = Rational(delta_g1(fam_prime, g1)) - Rational(1, 2);
        c.rhs_b = Rational(-8 * g1);
        sys.equations.push_back(c);
    }
    sys.provenance = {
        "f(Theta) = a Theta + b kappa_{0,1} + beta, f(kappa_{0,1}) = s Theta + t kappa_{0,1} + "
        "beta'",
        "s = 0 and a^g = c != 0 (top-degree and kappa^g pushforwards)",
        "a = t^2 (Theta^{g-1} kappa^2 pushforward is nonzero)",
        "beta' = (2b/t) [DR1]_{b^2}",
        "coefficients of [Gamma_{g1}] in the Theta^{g-1} kappa^3/3! pushforward depend on the "
        "stability parameter through delta_{g1}(z)",
    };
    return sys;
}

IsoAnsatz ansatz_from_witness(int g, const SatWitness& w) {
    if (w.t == 0)
        throw InvalidInput("the ansatz needs t != 0");
    IsoAnsatz an;
    an.t = w.t;
    an.b = w.b;
    an.s = 0;
    an.a = w.t * w.t;
    an.c = 1;
    for (int i = 0; i < g; ++i)
        an.c *= an.a;
    an.beta_prime_dr_coeff = 2 * w.b / w.t;
    return an;
}

bool witness_satisfies(const ConstraintSystem& sys, const SatWitness& w) {
    if (w.t == 0)
        return false;
    for (const Constraint& c : sys.equations)
        if (w.t * c.lhs_t != w.t * w.t * c.rhs_t2 + w.b * c.rhs_b)
            return false;
    return true;
}

namespace {

// Eliminating b between equations i and j leaves A t^2 = B t with
//   A = rhs_t2_i * g1_j - rhs_t2_j * g1_i,  B = lhs_t_i * g1_j - lhs_t_j * g1_i
// (after scaling each equation by the other's g1).
struct Elimination {
    Rational a;
    Rational b;
};

Elimination eliminate_b(const Constraint& ci, const Constraint& cj) {
    Rational gi(ci.g1), gj(cj.g1);
    return {ci.rhs_t2 * gj - cj.rhs_t2 * gi, ci.lhs_t * gj - cj.lhs_t * gi};
}

Rational solve_b(const Constraint& c, const Rational& t) {
    // t lhs_t = t^2 rhs_t2 + b rhs_b
    return (t * c.lhs_t - t * t * c.rhs_t2) / c.rhs_b;
}

}  // namespace

SolveResult solve_system(const ConstraintSystem& sys) {
    SolveResult res;
    const auto& eqs = sys.equations;
    if (eqs.empty()) {
        res.sat = true;
        res.witness = {1, 0};
        res.reason = "empty system";
        return res;
    }
    if (eqs.size() == 1) {
        res.sat = true;
        res.witness.t = 1;
        res.witness.b = solve_b(eqs[0], 1);
        res.reason = "single equation: fix t = 1 and solve for b";
        return res;
    }

    // candidate t values from pairwise elimination of b, smallest index pairs
    // first for deterministic certificates
    std::vector<Rational> candidates;
    bool all_degenerate = true;
    for (size_t i = 0; i < eqs.size(); ++i) {
        for (size_t j = i + 1; j < eqs.size(); ++j) {
            Elimination el = eliminate_b(eqs[i], eqs[j]);
            if (el.a == 0 && el.b == 0)
                continue;  // pair compatible for every t
            all_degenerate = false;
            if (el.a == 0 || el.b == 0) {
                // forces t = 0 or no solution at all: certificate {i, j}
                res.sat = false;
                res.certificate = {eqs[i].g1, eqs[j].g1};
                res.reason = el.a == 0
                                 ? "eliminating b forces 0 = B t with B != 0"
                                 : "eliminating b forces A t^2 = 0, i.e. t = 0";
                // keep looking for a SAT witness only if a later candidate works;
                // a forced-t=0 pair is already conclusive
                return res;
            }
            candidates.push_back(el.b / el.a);
        }
    }
    if (all_degenerate) {
        res.sat = true;
        res.witness.t = 1;
        res.witness.b = solve_b(eqs[0], 1);
        res.reason = "all pairs proportional: fix t = 1 and solve for b";
        return res;
    }

    for (const Rational& t : candidates) {
        if (t == 0)
            continue;
        SatWitness w{t, solve_b(eqs[0], t)};
        if (witness_satisfies(sys, w)) {
            res.sat = true;
            res.witness = w;
            res.reason = "pairwise elimination candidate verified on every equation";
            return res;
        }
    }

    // UNSAT: find a minimal conflicting certificate.  Two pairs sharing the
    // first equation with distinct candidate t give a 3-equation conflict.
    res.sat = false;
    for (size_t i = 0; i < eqs.size(); ++i) {
        for (size_t j = i + 1; j < eqs.size(); ++j) {
            Elimination e1 = eliminate_b(eqs[i], eqs[j]);
            if (e1.a == 0)
                continue;
            Rational t1 = e1.b / e1.a;
            for (size_t k = j + 1; k < eqs.size(); ++k) {
                Elimination e2 = eliminate_b(eqs[i], eqs[k]);
                if (e2.a == 0)
                    continue;
                if (e1.b * e2.a != e2.b * e1.a) {
                    res.certificate = {eqs[i].g1, eqs[j].g1, eqs[k].g1};
                    res.reason = "eliminating b in the two pairs gives t = " + to_string(t1) +
                                 " and t = " + to_string(e2.b / e2.a);
                    return res;
                }
                // same t: conflict must be with t = 0 or a failed substitution
                if (t1 == 0) {
                    res.certificate = {eqs[i].g1, eqs[j].g1};
                    res.reason = "elimination forces t = 0";
                    return res;
                }
            }
        }
    }
    // consistent t across pairs but failed verification against some
    // equation: report the offending triple
    for (size_t i = 0; i < eqs.size(); ++i) {
        for (size_t j = i + 1; j < eqs.size(); ++j) {
            Elimination e1 = eliminate_b(eqs[i], eqs[j]);
            if (e1.a == 0)
                continue;
            Rational t = e1.b / e1.a;
            SatWitness w{t, solve_b(eqs[i], t)};
            for (const Constraint& c : eqs) {
                if (w.t * c.lhs_t != w.t * w.t * c.rhs_t2 + w.b * c.rhs_b) {
                    res.certificate = {eqs[i].g1, eqs[j].g1, c.g1};
                    res.reason = "the candidate (t, b) from this pair fails equation g1 = " +
                                 std::to_string(c.g1);
                    return res;
                }
            }
        }
    }
    throw InvalidInput("solver invariant violated");
}

bool certificate_replays(const ConstraintSystem& sys, const std::vector<int>& cert) {
    std::vector<Constraint> eqs;
    for (int g1 : cert)
        for (const Constraint& c : sys.equations)
            if (c.g1 == g1)
                eqs.push_back(c);
    if (eqs.size() != cert.size() || eqs.size() < 2)
        return false;
    if (eqs.size() == 2) {
        Elimination el = eliminate_b(eqs[0], eqs[1]);
        // must force t = 0 (A t = B with B = 0) or be contradictory
        if (el.a == 0 && el.b != 0)
            return true;
        if (el.b == 0 && el.a != 0)
            return true;
        return false;
    }
    Elimination e1 = eliminate_b(eqs[0], eqs[1]);
    Elimination e2 = eliminate_b(eqs[0], eqs[2]);
    // cross-multiplied, distinct t requirements contradict exactly
    return e1.b * e2.a != e2.b * e1.a;
}

ObstructionReport obstruction_report(int g, long long z, long long z_prime) {
    if (g < 2)
        throw OutOfRange("obstruction_report needs g >= 2");
    ObstructionReport rep;
    rep.g = g;
    rep.z = z;
    rep.z_prime = z_prime;
    rep.profile_z = delta_profile(g, z);
    rep.profile_z_prime = delta_profile(g, z_prime);
    StabilityFamily fam{g, z}, fam_prime{g, z_prime};
    for (int g1 = 1; g1 <= g - 1; ++g1) {
        rep.a_coeffs_z.push_back(a_coeff(g, g1, fam));
        rep.a_coeffs_z_prime.push_back(a_coeff(g, g1, fam_prime));
    }
    rep.system = build_system(g, z, z_prime);
    rep.result = solve_system(rep.system);
    rep.rings_distinguished = !rep.result.sat;
    return rep;
}

}  // namespace jacring
