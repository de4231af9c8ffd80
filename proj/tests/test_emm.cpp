#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscbound/emm.hpp"
#include "oscbound/errors.hpp"
#include "oscbound/real.hpp"

using namespace oscb;

namespace {
Real r10(int k) { return pow10(Real(k)); }
}

TEST_CASE("low-order feasibility with a certified witness") {
    Real::set_precision(320);
    Problem prob(Real("0.7"), Representation::Psi);
    Feasibility f = feasible_at(prob, Real("1.2"), 5);
    CHECK(f.verdict == Verdict::Feasible);
    Real sum(0);
    for (const Real& v : f.witness) sum += v;
    CHECK(abs(sum - Real(1)) < r10(-80));
}

TEST_CASE("phi sigma=3 exact ground state at b=0") {
    Real::set_precision(320);
    Problem prob(Real(0), Representation::Phi, 3);
    CHECK(feasible_at(prob, Real(2), 8).verdict == Verdict::Feasible);
    CHECK(feasible_at(prob, Real(2), 24).verdict == Verdict::Feasible);
    CHECK(feasible_at(prob, Real("1.99"), 8).verdict == Verdict::Infeasible);
    CHECK(feasible_at(prob, Real("2.01"), 8).verdict == Verdict::Infeasible);

    EnergyInterval iv = ground_bounds(prob, 8, Bracket(Real(1), Real("2.4"), Real(1e-12)));
    CHECK(iv.lo == Real(2));
    CHECK(iv.hi == Real(2));
}

TEST_CASE("phi sigma=3 feasibility matches Table 2 at b=0.5") {
    Real::set_precision(320);
    Problem prob(Real("0.5"), Representation::Phi, 3);
    // P_max = 24 window is [1.4292927197475, 1.4292927197522]
    CHECK(feasible_at(prob, Real("1.42929271975"), 24).verdict == Verdict::Feasible);
    CHECK(feasible_at(prob, Real("1.43"), 24).verdict == Verdict::Infeasible);
    CHECK(feasible_at(prob, Real("1.4292"), 24).verdict == Verdict::Infeasible);
}

TEST_CASE("phi sigma=3 certified bounds: b=0.01 and b=0.5") {
    Real::set_precision(320);
    {
        Problem prob(Real("0.01"), Representation::Phi, 3);
        EnergyInterval iv = ground_bounds(prob, 20, Bracket(Real("0.52"), Real("2.49"), Real(1e-16)));
        // paper: [1.9867452618193, 1.9867452618204]
        CHECK(iv.lo <= Real("1.98674526181937"));
        CHECK(iv.hi >= Real("1.98674526181967"));
        CHECK(iv.width() < r10(-11));
        CHECK(abs(iv.lo - Real("1.9867452618193")) < r10(-12));
        CHECK(abs(iv.hi - Real("1.9867452618204")) < r10(-12));
    }
    {
        Problem prob(Real("0.5"), Representation::Phi, 3);
        EnergyInterval iv = ground_bounds(prob, 24, Bracket(Real("0.52"), Real("2.49"), Real(1e-16)));
        CHECK(abs(iv.lo - Real("1.4292927197475")) < r10(-12));
        CHECK(abs(iv.hi - Real("1.4292927197522")) < r10(-12));
    }
}

TEST_CASE("phi sigma=0 bounds at b=10 and the large-b asymptote window") {
    Real::set_precision(320);
    {
        Problem prob(Real(10), Representation::Phi, 0);
        Real delta = Real(3) / Real(800);
        Bracket scan(Real("0.5") + delta / Real(5), Real("0.5") + Real(4) * delta, Real(1e-15));
        EnergyInterval iv = ground_bounds(prob, 13, scan);
        // paper: [0.5038074052, 0.5038074090]
        CHECK(abs(iv.lo - Real("0.5038074052")) < r10(-9));
        CHECK(abs(iv.hi - Real("0.5038074090")) < r10(-9));
    }
    {
        Problem prob(Real(1000), Representation::Phi, 0);
        Real delta = Real(3) / Real(8000000);
        Bracket scan(Real("0.5") + delta / Real(5), Real("0.5") + Real(4) * delta, Real(1e-18));
        EnergyInterval iv = ground_bounds(prob, 7, scan);
        // paper: [0.500000375000431, 0.500000375004431]
        CHECK(abs(iv.lo - Real("0.500000375000431")) < r10(-14));
        CHECK(abs(iv.hi - Real("0.500000375004431")) < r10(-14));
    }
}

TEST_CASE("nesting: sigma=3 windows shrink with order") {
    Real::set_precision(320);
    Problem prob(Real("0.5"), Representation::Phi, 3);
    Bracket scan(Real("0.52"), Real("2.49"), Real(1e-15));
    EnergyInterval prev;
    bool have_prev = false;
    for (int pmax : {8, 12, 16, 20, 24}) {
        EnergyInterval iv = ground_bounds(prob, pmax, scan);
        if (have_prev) {
            CHECK(iv.lo >= prev.lo);
            CHECK(iv.hi <= prev.hi);
            CHECK(iv.width() < prev.width());
        }
        prev = iv;
        have_prev = true;
    }
}

TEST_CASE("monotone feasibility within the ground window") {
    Real::set_precision(320);
    Problem prob(Real("0.1"), Representation::Phi, 0);
    EnergyInterval iv = ground_bounds(prob, 16, Bracket(Real("0.52"), Real("2.49"), Real(1e-12)));
    int transitions = 0;
    bool last = false, first = true;
    for (int k = 0; k <= 60; ++k) {
        Real e = iv.lo - Real("0.01") + (iv.width() + Real("0.02")) * Real(k) / Real(60);
        bool feas = feasible_at(prob, e, 16).verdict == Verdict::Feasible;
        if (!first && feas != last) ++transitions;
        last = feas;
        first = false;
    }
    CHECK(transitions == 2);
}

TEST_CASE("psi ground bounds at b=1 overlap Table 1") {
    Real::set_precision(320);
    Problem prob(Real(1), Representation::Psi);
    EnergyInterval iv = ground_bounds(prob, 28, Bracket(Real(1), Real("2.49"), Real(1e-12)));
    // paper (14-digit arithmetic): [1.032844, 1.033323]
    CHECK(iv.lo <= Real("1.0331034"));
    CHECK(iv.hi >= Real("1.0331033"));
    CHECK(abs(iv.lo - Real("1.032844")) < Real("0.002"));
    CHECK(abs(iv.hi - Real("1.033323")) < Real("0.002"));
}

TEST_CASE("psi parity chains at b=0") {
    Real::set_precision(320);
    Problem even(Real(0), Representation::PsiChain, 0);
    EnergyInterval iv0 = ground_bounds(even, 17, Bracket(Real("1.2"), Real("2.49"), Real(1e-12)));
    CHECK(iv0.lo < Real(2));
    CHECK(iv0.hi > Real(2));
    // paper: [1.882144, 2.065301]
    CHECK(abs(iv0.lo - Real("1.882144")) < Real("0.01"));
    CHECK(abs(iv0.hi - Real("2.065301")) < Real("0.01"));

    Problem odd(Real(0), Representation::PsiChain, 1);
    EnergyInterval iv1 = ground_bounds(odd, 17, Bracket(Real("1.2"), Real("2.49"), Real(1e-12)));
    CHECK(iv1.lo < Real(2));
    CHECK(iv1.hi > Real(2));
    // paper: [1.946320, 2.199344]
    CHECK(abs(iv1.lo - Real("1.946320")) < Real("0.01"));
    CHECK(abs(iv1.hi - Real("2.199344")) < Real("0.01"));
}

TEST_CASE("psi2 state bounds contain 2(n+1) at b=0") {
    Real::set_precision(320);
    for (int state : {0, 1}) {
        EnergyInterval iv =
            psi2_state_bounds(Real(0), state, 26, Bracket(Real("0.6"), Real("7.4"), Real(1e-12)));
        CHECK(iv.contains(exact_b0_energy(state)));
        CHECK(iv.width() < Real("0.05"));
    }
}

TEST_CASE("psi2 excited state at b=1 matches Table 3") {
    Real::set_precision(320);
    EnergyInterval iv = psi2_state_bounds(Real(1), 1, 27, Bracket(Real("0.6"), Real("5.2"), Real(1e-12)));
    // paper: [2.55658870, 2.55901222]
    CHECK(iv.lo <= Real("2.55901222"));
    CHECK(iv.hi >= Real("2.55658870"));
    Real paper_width = Real("0.00242352");
    CHECK(iv.width() <= Real(3) * paper_width);
    CHECK(Real(3) * iv.width() >= paper_width);
}

TEST_CASE("algebraic ground check") {
    Real::set_precision(320);
    CHECK(algebraic_ground_check(Real(2), Real(0)));
    CHECK(algebraic_ground_check(Real("0.5038074053"), Real(10)));
    CHECK_FALSE(algebraic_ground_check(Real("0.4"), Real(5)));
    CHECK_FALSE(algebraic_ground_check(Real("0.5"), Real(5)));
    CHECK_FALSE(algebraic_ground_check(Real("2.0001"), Real(5)));
    CHECK_THROWS_AS(algebraic_ground_check(Real(1), Real(-1)), InvalidInputError);
}

TEST_CASE("empty window raises") {
    Real::set_precision(320);
    Problem prob(Real("0.5"), Representation::Phi, 3);
    CHECK_THROWS_AS(ground_bounds(prob, 24, Bracket(Real("1.6"), Real("1.9"), Real(1e-14))),
                    EmptyWindowError);
}
