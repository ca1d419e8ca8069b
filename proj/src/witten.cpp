#include "jacring/witten.hpp"

#include "jacring/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace jacring {

namespace {

struct Key {
    int genus;
    std::vector<int> exps;  // sorted descending
    bool operator<(const Key& o) const {
        if (genus != o.genus)
            return genus < o.genus;
        return exps < o.exps;
    }
};

std::map<Key, Rational> memo;
std::mutex memo_mutex;

Rational correlator_rec(int g, std::vector<int> a);

Rational lookup(int g, std::vector<int> a) {
    std::sort(a.begin(), a.end(), std::greater<int>());
    Key k{g, a};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(k);
        if (it != memo.end())
            return it->second;
    }
    Rational r = correlator_rec(g, k.exps);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(k, r);
    return r;
}

// Zero off the stable range / dimension constraint; callers need not check.
Rational guarded(int g, const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    if (g < 0 || n < 1 || (g == 0 && n < 3))
        return 0;
    long long dim = 0;
    for (int x : a) {
        if (x < 0)
            return 0;
        dim += x;
    }
    if (dim != 3LL * g - 3 + n)
        return 0;
    return lookup(g, a);
}

/*
 * DVV recursion from the Virasoro constraints L_m, m >= 1, applied to the
 * largest exponent a_1 = m + 1 >= 2:
 *
 *   (2m+3)!! <tau_{m+1} prod_j tau_{a_j}>_g
 *     = sum_j (2(a_j+m)+1)!!/(2a_j-1)!! <tau_{a_j+m} prod_{i != j}>_g
 *     + 1/2 sum_{k+c=m-1} (2k+1)!!(2c+1)!! [ <tau_k tau_c prod>_{g-1}
 *         + sum_{g1+g2=g} sum_{I} <tau_k prod_I>_{g1} <tau_c prod_Ic>_{g2} ]
 *
 * with string and dilaton handling exponents 0 and 1, and the base cases
 * <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
 */
Rational correlator_rec(int g, std::vector<int> a) {
    int n = static_cast<int>(a.size());
    if (g == 0 && n == 3)
        return (a[0] == 0 && a[1] == 0 && a[2] == 0) ? Rational(1) : Rational(0);
    if (g == 1 && n == 1)
        return a[0] == 1 ? Rational(1, 24) : Rational(0);

    // string: a contains 0 (a is sorted descending, so check the back)
    if (a.back() == 0) {
        std::vector<int> rest(a.begin(), a.end() - 1);
        Rational s = 0;
        for (size_t j = 0; j < rest.size(); ++j) {
            std::vector<int> b = rest;
            b[j] -= 1;
            s += guarded(g, b);
        }
        return s;
    }
    // dilaton
    if (a.back() == 1) {
        std::vector<int> rest(a.begin(), a.end() - 1);
        return Rational(2 * g - 2 + static_cast<int>(rest.size())) * guarded(g, rest);
    }

    // all exponents >= 2: recurse on the largest
    int m = a[0] - 1;
    std::vector<int> rest(a.begin() + 1, a.end());
    Rational rhs = 0;
    for (size_t j = 0; j < rest.size(); ++j) {
        std::vector<int> b = rest;
        b[j] += m;
        rhs += Rational(odd_double_factorial(2LL * (rest[j] + m) + 1),
                        odd_double_factorial(2LL * rest[j] - 1)) *
               guarded(g, b);
    }
    Rational quad = 0;
    int nr = static_cast<int>(rest.size());
    for (int k = 0; k <= m - 1; ++k) {
        int c = m - 1 - k;
        Rational weight(odd_double_factorial(2LL * k + 1) * odd_double_factorial(2LL * c + 1));
        std::vector<int> b = rest;
        b.push_back(k);
        b.push_back(c);
        Rational term = guarded(g - 1, b);
        // ordered splittings (g1, I) x (g2, Ic)
        for (int g1 = 0; g1 <= g; ++g1) {
            int g2 = g - g1;
            for (unsigned mask = 0; mask < (1u << nr); ++mask) {
                std::vector<int> left{k}, right{c};
                for (int i = 0; i < nr; ++i)
                    (mask & (1u << i) ? left : right).push_back(rest[i]);
                term += guarded(g1, left) * guarded(g2, right);
            }
        }
        quad += weight * term;
    }
    rhs += quad / 2;
    return rhs / Rational(odd_double_factorial(2LL * m + 3));
}

}  // namespace

Rational witten_correlator(const Correlator& c) {
    if (c.genus == 0 && c.exponents.size() < 3)
        throw InvalidInput("genus 0 needs at least 3 markings");
    if (c.exponents.empty())
        throw InvalidInput("need at least one marking");
    return guarded(c.genus, c.exponents);
}

Rational psi_kappa_integral(int g, int n, const std::vector<int>& psi_exponents,
                            std::optional<int> kappa_index) {
    if (static_cast<int>(psi_exponents.size()) != n)
        throw InvalidInput("expected one psi exponent per marking");
    long long degree = 0;
    for (int e : psi_exponents)
        degree += e;
    if (kappa_index)
        degree += *kappa_index;
    if (degree != 3LL * g - 3 + n)
        throw DimensionMismatch("degree " + std::to_string(degree) + " != 3g-3+n");
    std::vector<int> exps = psi_exponents;
    if (kappa_index)
        exps.push_back(*kappa_index + 1);
    return witten_correlator({g, exps});
}

Rational one_point_closed_form(int g) {
    Integer p = 1;
    for (int i = 0; i < g; ++i)
        p *= 24;
    return Rational(Integer(1), p * factorial(static_cast<unsigned>(g)));
}

Rational vine_pairing(int g, int i, int j, bool divide_by_aut) {
    if (i < 1 || i > g - 1 || j < 1 || j > g - 1)
        throw OutOfRange("vine_pairing needs 1 <= i, j <= g-1");
    if (i != j)
        return 0;
    int h = g - 1 - i;  // genus of the leg vertex, which also carries both nodes
    Rational left = psi_kappa_integral(h, 3, {3 * g - 3 - 3 * i, 0, 0}, std::nullopt);
    Rational right = psi_kappa_integral(i, 2, {0, 0}, 3 * i - 1);
    Rational r = left * right;
    if (divide_by_aut)
        r /= 2;  // |Aut(Gamma_{g1})| = 2 (edge swap)
    return r;
}

int pairing_matrix_rank(int g, bool divide_by_aut) {
    if (g < 2)
        throw OutOfRange("pairing matrix needs g >= 2");
    int n = g - 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = vine_pairing(g, i + 1, j + 1, divide_by_aut);
    // exact Gaussian elimination
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int row = rank; row < n; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[rank], m[pivot]);
        for (int row = rank + 1; row < n; ++row) {
            if (m[row][col] == 0)
                continue;
            Rational f = m[row][col] / m[rank][col];
            for (int c2 = col; c2 < n; ++c2)
                m[row][c2] -= f * m[rank][c2];
        }
        ++rank;
    }
    return rank;
}

}  // namespace jacring
