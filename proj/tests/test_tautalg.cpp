#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacring/tautalg.hpp"

#include "jacring/errors.hpp"

#include <random>

using namespace jacring;

namespace {

TautExpr open_monomial(int theta, int kappa, Rational coeff = 1) {
    TautExpr e;
    DecoratedTerm t;
    t.coeff = std::move(coeff);
    if (theta)
        t.monomial[theta_div()] = theta;
    if (kappa)
        t.monomial[kappa01_div()] = kappa;
    e.add(t);
    return e;
}

}  // namespace

TEST_CASE("perversity weight") {
    const int g = 4;
    DecoratedTerm t;
    t.monomial[theta_div()] = g;
    CHECK(perversity(t) == 2 * g);
    t.monomial[theta_div()] = g - 1;
    t.monomial[kappa01_div()] = 1;
    CHECK(perversity(t) == 2 * g - 1);
    t.monomial[kappa01_div()] = 3;
    CHECK(perversity(t) == 2 * g + 1);
    t.monomial[xi_div(2)] = 2;
    CHECK(perversity(t) == 2 * g + 3);
}

TEST_CASE("xi_1 is identically zero") {
    TautExpr e;
    DecoratedTerm t;
    t.monomial[xi_div(1)] = 1;
    e.add(t);
    CHECK(e.is_zero());
}

TEST_CASE("pushforward catalog rules") {
    const int g = 4;
    PushContext ctx{g, StabilityFamily{g, 0}};

    CHECK(pushforward(open_monomial(g, 0), ctx) == BaseExpr::term(24));  // g! = 24
    CHECK(pushforward(open_monomial(g, 1), ctx).is_zero());
    CHECK(pushforward(open_monomial(g - 1, 1), ctx).is_zero());  // perversity 2g-1

    SUBCASE("rule (d): Theta^{g-1} kappa^2") {
        BaseExpr r = pushforward(open_monomial(g - 1, 2), ctx);
        BaseExpr expect = BaseExpr::symbol(dr1b2_symbol(),
                                           Rational(-2 * factorial(static_cast<unsigned>(g - 1))));
        CHECK(r == expect);
    }

    SUBCASE("rule (e): Theta^{g-1} kappa^3 at z=0") {
        Rational norm(Integer(1), factorial(3) * factorial(3));  // 1/((g-1)! 3!)
        BaseExpr r = pushforward(open_monomial(g - 1, 3, norm), ctx);
        BaseExpr expect = BaseExpr::symbol(gamma_symbol(1), Rational(1, 3)) +
                          BaseExpr::symbol(gamma_symbol(2), Rational(8, 3)) +
                          BaseExpr::symbol(gamma_symbol(3), 9);
        CHECK(r == expect);
    }

    SUBCASE("projection formula: psi_1 passes through") {
        TautExpr e;
        DecoratedTerm t;
        t.monomial[theta_div()] = g;
        t.monomial[kappa01_div()] = 1;
        t.monomial[psi_mark_div(1)] = 1;
        e.add(t);
        CHECK(pushforward(e, ctx).is_zero());

        TautExpr e2;
        DecoratedTerm t2;
        t2.monomial[theta_div()] = g;
        t2.monomial[psi_mark_div(1)] = 2;
        e2.add(t2);
        BaseExpr r = pushforward(e2, ctx);
        CHECK(r == BaseExpr::term(24, BaseMonomial{{psi1_symbol(), 2}}));
    }

    SUBCASE("base factors pass through every catalog rule") {
        std::mt19937 rng(3);
        struct Shape {
            int theta, kappa;
            Stratum stratum;
        };
        std::vector<Shape> shapes = {
            {g, 0, {}},
            {g, 1, {}},
            {g - 1, 2, {}},
            {g - 1, 3, {}},
            {g - 2, 1, {}},  // perversity vanishing
            {g - 1, 1, {Stratum::Kind::VinePlus, 2, 0}},
            {g - 1, 1, {Stratum::Kind::VineMinus, 1, 0}},
            {g - 2, 2, {Stratum::Kind::VinePlus, 3, 0}},
        };
        for (const Shape& shape : shapes) {
            BaseMonomial beta{{kappa_symbol(2), static_cast<int>(rng() % 3 + 1)},
                              {psi1_symbol(), static_cast<int>(rng() % 2)}};
            Rational coeff(static_cast<int>(rng() % 7 + 1), 3);
            TautExpr bare, dressed;
            DecoratedTerm t;
            t.coeff = coeff;
            t.stratum = shape.stratum;
            if (shape.theta)
                t.monomial[theta_div()] = shape.theta;
            if (shape.kappa)
                t.monomial[kappa01_div()] = shape.kappa;
            bare.add(t);
            t.base_factor = beta;
            dressed.add(t);
            CHECK(pushforward(dressed, ctx) ==
                  pushforward(bare, ctx) * BaseExpr::term(1, beta));
        }
    }

    SUBCASE("NoRule outside the catalog") {
        CHECK_THROWS_AS(pushforward(open_monomial(g, 2), ctx), NoRule);
        TautExpr e;
        DecoratedTerm t;
        t.monomial[xi_div(2)] = 1;
        t.monomial[theta_div()] = g;
        e.add(t);
        CHECK_THROWS_AS(pushforward(e, ctx), NoRule);
    }
}

TEST_CASE("vine stratum rules and the 2g1 cancellation") {
    const int g = 5;
    PushContext ctx{g, StabilityFamily{g, 1}};
    for (int g1 = 1; g1 <= g - 1; ++g1) {
        TautExpr plus, minus, both;
        DecoratedTerm t;
        t.coeff = Rational(Integer(1), factorial(static_cast<unsigned>(g - 1)));
        t.monomial[theta_div()] = g - 1;
        t.monomial[kappa01_div()] = 1;
        t.stratum = {Stratum::Kind::VinePlus, g1, 0};
        plus.add(t);
        both.add(t);
        t.stratum.kind = Stratum::Kind::VineMinus;
        minus.add(t);
        both.add(t);
        CHECK(pushforward(plus, ctx) == BaseExpr::symbol(gamma_symbol(g1), 2 * g1));
        CHECK(pushforward(minus, ctx) == BaseExpr::symbol(gamma_symbol(g1), -2 * g1));
        CHECK(pushforward(both, ctx).is_zero());

        // rule (g): Theta^{g-2} kappa^2 on either stratum dies
        TautExpr gkill;
        DecoratedTerm t2;
        t2.monomial[theta_div()] = g - 2;
        t2.monomial[kappa01_div()] = 2;
        t2.stratum = {Stratum::Kind::VinePlus, g1, 0};
        gkill.add(t2);
        CHECK(pushforward(gkill, ctx).is_zero());
    }
}

TEST_CASE("forgetful pushforward on divisors") {
    CHECK(forgetful_pushforward(BaseExpr::symbol(psi1_symbol()), 3) == BaseExpr::term(4));
    CHECK(forgetful_pushforward(BaseExpr::symbol(kappa_symbol(1)), 3) == BaseExpr::term(4));
    CHECK(forgetful_pushforward(BaseExpr::symbol(pullback_symbol(2)), 5).is_zero());
    CHECK_THROWS_AS(forgetful_pushforward(BaseExpr::symbol(kappa_symbol(2)), 3), Unsupported);

    SUBCASE("the interior DR class pushes to 8g(g-1)^2") {
        for (int g = 2; g <= 20; ++g) {
            BaseExpr twice = Rational(2) * dr1_b2_interior(g);
            Rational expect = Rational(8 * g) * Rational(Integer(g - 1) * Integer(g - 1));
            CHECK(forgetful_pushforward(twice, g) == BaseExpr::term(expect));
        }
    }
}

TEST_CASE("dr1_b2_interior matches the displayed formula") {
    CHECK(dr1_b2_interior(2) == BaseExpr::symbol(kappa_symbol(1), Rational(-1, 2)) +
                                    BaseExpr::symbol(psi1_symbol(), Rational(9, 2)));
    CHECK(dr1_b2_interior(3) == BaseExpr::symbol(kappa_symbol(1), Rational(-1, 2)) +
                                    BaseExpr::symbol(psi1_symbol(), Rational(25, 2)));
}

TEST_CASE("dr_combo coefficients (2g1)^4/48") {
    CHECK(dr_combo(2) == BaseExpr::symbol(gamma_symbol(1), Rational(1, 3)));
    CHECK(dr_combo(3) == BaseExpr::symbol(gamma_symbol(1), Rational(1, 3)) +
                             BaseExpr::symbol(gamma_symbol(2), Rational(16, 3)));
    CHECK(dr_combo(4) == BaseExpr::symbol(gamma_symbol(1), Rational(1, 3)) +
                             BaseExpr::symbol(gamma_symbol(2), Rational(16, 3)) +
                             BaseExpr::symbol(gamma_symbol(3), 27));
}

TEST_CASE("a_coeff closed form") {
    CHECK(a_coeff(4, 1, StabilityFamily{4, 0}) == Rational(1, 3));
    CHECK(a_coeff(4, 2, StabilityFamily{4, 2}) == Rational(-8, 3));
    for (int g = 2; g <= 6; ++g)
        for (int g1 = 1; g1 <= g - 1; ++g1) {
            Rational cube(Integer(2 * g1) * Integer(2 * g1) * Integer(2 * g1));
            CHECK(a_coeff(g, g1, StabilityFamily{g, 0}) == cube / 24);
        }
}

TEST_CASE("REL2 instantiation prunes to a pushforward-zero right side") {
    for (int g : {2, 3}) {
        PushContext ctx{g, StabilityFamily{g, 0}};
        RelationInstance inst = instantiate_relation(RelationId::REL2, ctx);
        CHECK(pushforward(inst.rhs, ctx).is_zero());
        bool has_stability_prune = false;
        for (const auto& e : inst.log)
            if (e.kind == JustificationEntry::Kind::StabilityPrune)
                has_stability_prune = true;
        CHECK(has_stability_prune);
        bool has_elided = false;
        for (const auto& e : inst.log)
            if (e.kind == JustificationEntry::Kind::ElidedOtherTerms)
                has_elided = true;
        CHECK(has_elided);
        // lhs is Theta^g kappa / g!, so the relation yields pi_*(Theta^g kappa) = 0,
        // consistent with catalog rule (c)
        CHECK(pushforward(inst.lhs, ctx).is_zero());
    }
}

TEST_CASE("REL22 second-term survivors follow the delta profile") {
    // at (g, z) = (4, 2) the profile is (0, 1, 1): the degree factor kills
    // the VineMinus stratum at g1 = 1 and the VinePlus strata at g1 = 2, 3
    PushContext ctx{4, StabilityFamily{4, 2}};
    RelationInstance inst = instantiate_relation(RelationId::REL22, ctx);
    bool plus[4] = {}, minus[4] = {};
    for (const auto& t : inst.rhs.terms()) {
        if (t.exponent(theta_div()) != 3 || t.edge_psi || t.exponent(kappa01_div()) != 0)
            continue;
        if (t.stratum.kind == Stratum::Kind::VinePlus)
            plus[t.stratum.g1] = true;
        if (t.stratum.kind == Stratum::Kind::VineMinus)
            minus[t.stratum.g1] = true;
    }
    CHECK(plus[1]);
    CHECK_FALSE(minus[1]);
    CHECK_FALSE(plus[2]);
    CHECK(minus[2]);
    CHECK_FALSE(plus[3]);
    CHECK(minus[3]);

    bool coeff_zero_logged = false;
    for (const auto& e : inst.log)
        if (e.kind == JustificationEntry::Kind::CoefficientZero)
            coeff_zero_logged = true;
    CHECK(coeff_zero_logged);
}

TEST_CASE("derive_kappa3_pushforward: relation pipeline vs closed form") {
    SUBCASE("pinned examples") {
        PushContext c40{4, StabilityFamily{4, 0}};
        CHECK(derive_kappa3_pushforward(c40) ==
              BaseExpr::symbol(gamma_symbol(1), Rational(1, 3)) +
                  BaseExpr::symbol(gamma_symbol(2), Rational(8, 3)) +
                  BaseExpr::symbol(gamma_symbol(3), 9));
        PushContext c20{2, StabilityFamily{2, 0}};
        CHECK(derive_kappa3_pushforward(c20) ==
              BaseExpr::symbol(gamma_symbol(1), Rational(1, 3)));
        PushContext c42{4, StabilityFamily{4, 2}};
        CHECK(derive_kappa3_pushforward(c42) ==
              BaseExpr::symbol(gamma_symbol(1), Rational(1, 3)) +
                  BaseExpr::symbol(gamma_symbol(2), Rational(-8, 3)) +
                  BaseExpr::symbol(gamma_symbol(3), -9));
    }

    SUBCASE("full grid agreement with the closed form") {
        for (int g = 2; g <= 8; ++g)
            for (long long z = -3; z <= 3; ++z) {
                PushContext ctx{g, StabilityFamily{g, z}};
                BaseExpr closed;
                for (int g1 = 1; g1 <= g - 1; ++g1)
                    closed += BaseExpr::symbol(gamma_symbol(g1), a_coeff(g, g1, ctx.fam));
                CAPTURE(g);
                CAPTURE(z);
                CHECK(derive_kappa3_pushforward(ctx) == closed);
            }
    }

    SUBCASE("matches 1/((g-1)! 3!) times catalog rule (e)") {
        for (int g = 2; g <= 6; ++g) {
            PushContext ctx{g, StabilityFamily{g, 1}};
            Rational norm(Integer(1),
                          factorial(static_cast<unsigned>(g - 1)) * factorial(3));
            CHECK(derive_kappa3_pushforward(ctx) ==
                  norm * pushforward(open_monomial(g - 1, 3), ctx));
        }
    }
}

TEST_CASE("relation instantiation rejects degenerate families") {
    StabilityFamily bad{4, 0};
    bad.one_edge_override = EpsRational{Rational(3, 4), 0};  // not semismall
    PushContext ctx{4, bad};
    CHECK_THROWS_AS(instantiate_relation(RelationId::REL22, ctx), DegenerateFamily);
}

TEST_CASE("REL3/REL4/REL5 instantiate with stability pruning at degree zero") {
    PushContext ctx{3, StabilityFamily{3, 0}};
    RelationInstance r3 = instantiate_relation(RelationId::REL3, ctx);
    CHECK(r3.rhs.terms().size() == 1);  // the 2g Theta^g xi_2 term survives
    CHECK(r3.rhs.terms().front().exponent(xi_div(2)) == 1);
    RelationInstance r4 = instantiate_relation(RelationId::REL4, ctx);
    CHECK(r4.rhs.is_zero());
    RelationInstance r5 = instantiate_relation(RelationId::REL5, ctx);
    CHECK(r5.rhs.is_zero());
    CHECK(r5.lhs.terms().front().exponent(theta_div()) == 4);  // Theta^{g+1}
}

TEST_CASE("pushforward is linear") {
    const int g = 3;
    PushContext ctx{g, StabilityFamily{g, 0}};
    TautExpr sum = open_monomial(g, 0, Rational(2)) + open_monomial(g - 1, 2, Rational(-1, 2));
    BaseExpr separately = Rational(2) * pushforward(open_monomial(g, 0), ctx) +
                          Rational(-1, 2) * pushforward(open_monomial(g - 1, 2), ctx);
    CHECK(pushforward(sum, ctx) == separately);
}
