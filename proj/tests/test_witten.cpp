#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacring/witten.hpp"

#include "jacring/errors.hpp"

#include <random>
#include <thread>

using namespace jacring;

TEST_CASE("base cases and small correlators") {
    CHECK(witten_correlator({0, {0, 0, 0}}) == 1);
    CHECK(witten_correlator({1, {1}}) == Rational(1, 24));
    CHECK(witten_correlator({2, {4}}) == Rational(1, 1152));
    // dimension filter
    CHECK(witten_correlator({0, {1, 0, 0}}) == 0);
    CHECK(witten_correlator({1, {2}}) == 0);
}

TEST_CASE("classical values through the recursion") {
    // <tau_0^4>_0 = 1, <tau_0^3 tau_1>_0 = 1, <tau_0 tau_1>_1 hits string
    CHECK(witten_correlator({0, {1, 0, 0, 0}}) == 1);
    CHECK(witten_correlator({0, {2, 0, 0, 0, 0}}) == 1);
    CHECK(witten_correlator({0, {1, 1, 0, 0, 0}}) == 2);
    CHECK(witten_correlator({1, {0, 2}}) == Rational(1, 24));
    CHECK(witten_correlator({1, {1, 1}}) == Rational(1, 24));
    // <tau_2 tau_3>_2 = 29/5760 (Witten's table)
    CHECK(witten_correlator({2, {2, 3}}) == Rational(29, 5760));
    // <tau_7>_3 = 1/82944 = 1/(24^3 3!)
    CHECK(witten_correlator({3, {7}}) == Rational(1, 82944));
}

TEST_CASE("one-point closed form matches the recursion for g = 1..8") {
    for (int g = 1; g <= 8; ++g)
        CHECK(witten_correlator({g, {3 * g - 2}}) == one_point_closed_form(g));
}

TEST_CASE("permutation invariance of exponents") {
    CHECK(witten_correlator({2, {3, 2}}) == witten_correlator({2, {2, 3}}));
    CHECK(witten_correlator({1, {0, 1, 2, 1}}) == witten_correlator({1, {2, 1, 1, 0}}));
}

TEST_CASE("string and dilaton hold on randomized exact instances") {
    std::mt19937 rng(7);
    int done = 0;
    while (done < 60) {
        int g = static_cast<int>(rng() % 5);
        int n = 1 + static_cast<int>(rng() % 4);
        if (g == 0)
            n = std::max(n, 3);
        long long dim = 3LL * g - 3 + n;
        if (dim < 0 || dim > 14)
            continue;
        std::vector<int> a(static_cast<size_t>(n), 0);
        for (long long s = 0; s < dim; ++s)
            a[rng() % a.size()] += 1;

        // dilaton
        std::vector<int> with_one = a;
        with_one.push_back(1);
        CHECK(witten_correlator({g, with_one}) ==
              Rational(2 * g - 2 + n) * witten_correlator({g, a}));

        // string, on a bumped profile
        std::vector<int> x = a;
        x[rng() % x.size()] += 1;
        std::vector<int> with_zero = x;
        with_zero.push_back(0);
        Rational rhs = 0;
        for (size_t j = 0; j < x.size(); ++j) {
            if (x[j] == 0)
                continue;
            std::vector<int> y = x;
            y[j] -= 1;
            rhs += witten_correlator({g, y});
        }
        CHECK(witten_correlator({g, with_zero}) == rhs);
        ++done;
    }
}

TEST_CASE("genus 0 matches the multinomial closed form") {
    // <tau_{a_1} ... tau_{a_n}>_0 = (n-3)! / prod a_i!  when sum a_i = n-3
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<int> a(static_cast<size_t>(n), 0);
        for (int s = 0; s < n - 3; ++s)
            a[rng() % a.size()] += 1;
        Rational expect(factorial(static_cast<unsigned>(n - 3)));
        for (int e : a)
            expect /= Rational(factorial(static_cast<unsigned>(e)));
        CAPTURE(n);
        CHECK(witten_correlator({0, a}) == expect);
    }
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(witten_correlator({0, {0, 0}}), InvalidInput);
    CHECK_THROWS_AS(witten_correlator({2, {}}), InvalidInput);
}

TEST_CASE("kappa integrals via the extra marking") {
    // kappa_1 on Mbar_{1,1}
    CHECK(psi_kappa_integral(1, 1, {0}, 1) == Rational(1, 24));
    // psi_1^{3h} on Mbar_{h,3}
    for (int h = 0; h <= 4; ++h)
        CHECK(psi_kappa_integral(h, 3, {3 * h, 0, 0}, std::nullopt) == one_point_closed_form(h));
    CHECK(psi_kappa_integral(0, 3, {0, 0, 0}, std::nullopt) == 1);
    // kappa_{3i-1} on Mbar_{i,2}
    CHECK(psi_kappa_integral(1, 2, {0, 0}, 2) == witten_correlator({1, {0, 0, 3}}));
    CHECK_THROWS_AS(psi_kappa_integral(2, 1, {1}, std::nullopt), DimensionMismatch);
}

TEST_CASE("vine pairing is diagonal with the predicted entries") {
    CHECK(vine_pairing(2, 1, 1) == Rational(1, 24));
    CHECK(vine_pairing(5, 2, 3) == 0);
    CHECK(vine_pairing(3, 2, 2) == Rational(1, 1152));
    CHECK_THROWS_AS(vine_pairing(3, 0, 1), OutOfRange);

    for (int g = 2; g <= 10; ++g)
        for (int i = 1; i <= g - 1; ++i) {
            Rational expect = one_point_closed_form(g - 1 - i) * one_point_closed_form(i);
            CHECK(vine_pairing(g, i, i) == expect);
            CHECK(vine_pairing(g, i, i) > 0);
        }
}

TEST_CASE("the memo table is safe under concurrent use") {
    std::vector<Rational> expected;
    for (int g = 1; g <= 5; ++g)
        expected.push_back(one_point_closed_form(g));
    std::vector<std::thread> workers;
    std::vector<std::vector<Rational>> got(4);
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (int g = 1; g <= 5; ++g)
                got[static_cast<size_t>(w)].push_back(witten_correlator({g, {3 * g - 2}}));
        });
    for (auto& t : workers)
        t.join();
    for (const auto& results : got)
        CHECK(results == expected);
}

TEST_CASE("pairing matrix rank equals g-1, with or without the Aut factor") {
    CHECK(pairing_matrix_rank(2) == 1);
    CHECK(pairing_matrix_rank(4) == 3);
    CHECK(pairing_matrix_rank(7) == 6);
    CHECK(pairing_matrix_rank(7, true) == 6);
    CHECK(vine_pairing(2, 1, 1, true) == Rational(1, 48));
}
