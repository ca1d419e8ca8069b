#pragma once

#include "jacring/rational.hpp"

#include <optional>
#include <vector>

namespace jacring {

// <tau_{a1} ... tau_{an}>_g, exponents unordered.
struct Correlator {
    int genus = 0;
    std::vector<int> exponents;
};

// Exact psi intersection number via string/dilaton reduction and the DVV
// (Virasoro) recursion, normalized by <tau_0^3>_0 = 1.  Zero off the
// dimension constraint sum(a_i) = 3g - 3 + n.
Rational witten_correlator(const Correlator& c);

// Integral over Mbar_{g,n} of psi_1^{e1} ... psi_n^{en} (cup kappa_b when
// kappa_index is set).  A single kappa_b lifts exactly to a psi power at an
// extra marking: kappa_b = pi_*(psi_{n+1}^{b+1}) and the comparison divisors
// die against psi_{n+1}.
Rational psi_kappa_integral(int g, int n, const std::vector<int>& psi_exponents,
                            std::optional<int> kappa_index);

// The H^4 pairing of the linear-independence lemma:
// 0 for i != j, else the product of the two vertex integrals of Gamma_i
// against psi_1^{3g-3-3i} kappa_{3i-1}.
Rational vine_pairing(int g, int i, int j, bool divide_by_aut = false);

// Exact rank of the (g-1) x (g-1) matrix vine_pairing(g, i, j).
int pairing_matrix_rank(int g, bool divide_by_aut = false);

// One-point closed form 1/(24^g g!), used as the independent check of the
// recursion.
Rational one_point_closed_form(int g);

}  // namespace jacring
