#pragma once

#include "jacring/rational.hpp"
#include "jacring/stability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jacring {

// One equation of (the reduced form of) the divisor-isomorphism constraint
// system: t (delta - 1/2) = t^2 (delta' - 1/2) - 8 b g1.
struct Constraint {
    int g1 = 1;
    Rational lhs_t;    // delta - 1/2
    Rational rhs_t2;   // delta' - 1/2
    Rational rhs_b;    // -8 g1

    std::string str() const;
};

struct ConstraintSystem {
    int g = 2;
    long long z = 0;
    long long z_prime = 0;
    std::vector<Constraint> equations;
    std::vector<std::string> provenance;
};

struct SatWitness {
    Rational t;
    Rational b;
};

// The reduced divisor-isomorphism ansatz: f(Theta) = a Theta + b kappa + beta,
// f(kappa) = s Theta + t kappa + beta', with s = 0, a = t^2, c = a^g != 0 and
// beta' = (2b/t) [DR1]_{b^2} already imposed.
struct IsoAnsatz {
    Rational a;
    Rational b;
    Rational s;
    Rational t;
    Rational c;
    Rational beta_prime_dr_coeff;  // beta' = (this) * DR1b2
};

IsoAnsatz ansatz_from_witness(int g, const SatWitness& w);

struct SolveResult {
    bool sat = false;
    SatWitness witness;               // valid when sat
    std::vector<int> certificate;     // g1 indices, <= 3 of them, when unsat
    std::string reason;               // replayable elimination summary
};

std::vector<Integer> delta_profile(int g, long long z);
ConstraintSystem build_system(int g, long long z, long long z_prime);
SolveResult solve_system(const ConstraintSystem& sys);

// Exactness check: every equation holds at the witness.
bool witness_satisfies(const ConstraintSystem& sys, const SatWitness& w);

// Replay an UNSAT certificate: exact elimination on the named equations
// derives a contradiction or forces t = 0.
bool certificate_replays(const ConstraintSystem& sys, const std::vector<int>& cert);

struct ObstructionReport {
    int g;
    long long z, z_prime;
    std::vector<Integer> profile_z;
    std::vector<Integer> profile_z_prime;
    std::vector<Rational> a_coeffs_z;
    std::vector<Rational> a_coeffs_z_prime;
    ConstraintSystem system;
    SolveResult result;
    bool rings_distinguished = false;
};

ObstructionReport obstruction_report(int g, long long z, long long z_prime);

}  // namespace jacring
