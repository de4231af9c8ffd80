#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oscbound/errors.hpp"
#include "oscbound/mer.hpp"
#include "oscbound/real.hpp"

using namespace oscb;

namespace {

Real r10(int k) { return pow10(Real(k)); }

// quadrature oracle: int_0^inf chi^{p-1/2} e^{-chi^2/2} dchi via chi = t^2
Real halfint_gaussian_moment(int p) {
    return Real(2) * adaptive_gl([&](const Real& t) { return pow(t, 2 * p) * exp(-pow(t, 4) / Real(2)); },
                                 sqrt(Real(46)), r10(-100));
}

}  // namespace

TEST_CASE("psi generator: b=0, E=2 row and identity block") {
    Real::set_precision(320);
    Problem prob(Real(0), Representation::Psi);
    GeneratorTable t = build_generator(prob, Real(2), 12);
    REQUIRE(t.ms == 3);
    for (int l1 = 0; l1 <= 3; ++l1)
        for (int l2 = 0; l2 <= 3; ++l2) CHECK(t.at(l1, l2) == (l1 == l2 ? Real(1) : Real(0)));
    // u(4) = 4 u(2) - 0.75 u(0)
    CHECK(t.at(4, 2) == Real(4));
    CHECK(t.at(4, 0) == Real(-0.75));
    CHECK(t.at(4, 1) == Real(0));
    CHECK(t.at(4, 3) == Real(0));
}

TEST_CASE("psi b=0 parity decoupling") {
    Real::set_precision(320);
    Problem prob(Real(0), Representation::Psi);
    GeneratorTable t = build_generator(prob, Real("1.7"), 40);
    for (int p = 0; p <= 40; ++p)
        for (int l = 0; l <= 3; ++l)
            if ((p + l) % 2 == 1) CHECK(t.at(p, l).is_zero());
}

TEST_CASE("phi sigma=3 n=0 relation") {
    Real::set_precision(320);
    Problem prob(Real(1), Representation::Phi, 3);
    GeneratorTable t = build_generator(prob, Real("1.7"), 10);
    REQUIRE(t.ms == 0);
    // (2E-4) tau(1) = -3 b tau(0) with tau(0) = 1
    CHECK(abs(t.at(1, 0) - Real(-3) / (Real("3.4") - Real(4))) < r10(-90));

    // at b = 0 and E != 2 the relation forces tau(1) = 0
    Problem prob0(Real(0), Representation::Phi, 3);
    GeneratorTable t0 = build_generator(prob0, Real("1.7"), 10);
    CHECK(t0.at(1, 0).is_zero());

    CHECK_THROWS_AS(build_generator(prob0, Real(2), 10), DegenerateEnergyError);
    CHECK_THROWS_AS(build_generator(Problem(Real(1), Representation::Phi, 0), Real("1.5"), 10),
                    DegenerateEnergyError);
}

TEST_CASE("moments_from_missing basics") {
    Real::set_precision(320);
    Problem prob(Real("0.3"), Representation::Psi);
    GeneratorTable t = build_generator(prob, Real("1.1"), 20);
    MissingMomentVector e0{{Real(1), Real(0), Real(0), Real(0)}};
    std::vector<Real> m = moments_from_missing(t, e0);
    for (int p = 0; p <= 20; ++p) CHECK(m[p] == t.at(p, 0));

    MissingMomentVector u{{Real("0.1"), Real("0.2"), Real("0.3"), Real("0.4")}};
    m = moments_from_missing(t, u);
    for (int l = 0; l <= 3; ++l) CHECK(abs(m[l] - u.u[l]) < r10(-90));
}

TEST_CASE("psi ground state moments at b=0 match quadrature") {
    Real::set_precision(320);
    // u(p) of the exact ground state: moments of chi^{-1/2} e^{-chi^2/2}
    std::vector<Real> exact(31);
    for (int p = 0; p <= 30; ++p) exact[p] = halfint_gaussian_moment(p);
    Real norm = exact[0] + exact[1] + exact[2] + exact[3];

    Problem prob(Real(0), Representation::Psi);
    GeneratorTable t = build_generator(prob, Real(2), 30);
    MissingMomentVector u{{exact[0] / norm, exact[1] / norm, exact[2] / norm, exact[3] / norm}};
    std::vector<Real> m = moments_from_missing(t, u);
    for (int p = 0; p <= 30; ++p) CHECK(abs(m[p] - exact[p] / norm) < r10(-30) * (Real(1) + exact[p] / norm));
}

TEST_CASE("generator consistency for random parameters") {
    Real::set_precision(320);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
        Real b(2.5 * dist(rng));
        Real E(0.6 + 1.2 * dist(rng));
        MissingMomentVector u{{Real(dist(rng)), Real(dist(rng)), Real(dist(rng)), Real(dist(rng))}};
        Real s = u.u[0] + u.u[1] + u.u[2] + u.u[3];
        for (Real& v : u.u) v /= s;

        Problem psi(b, Representation::Psi);
        GeneratorTable t = build_generator(psi, E, 36);
        std::vector<Real> m = moments_from_missing(t, u);
        Real beta = psi.beta(), lam = psi.lambda_of(E);
        for (int p = 0; p + 4 <= 36; ++p) {
            Real rhs = -beta * m[p + 3] + lam * m[p + 2] + (Real(p) * Real(p - 1) - Real(0.75)) * m[p];
            Real scale = Real(1) + abs(m[p + 4]);
            CHECK(abs(m[p + 4] - rhs) < r10(-80) * scale);
        }

        Problem psi2(b, Representation::Psi2);
        GeneratorTable t2 = build_generator(psi2, E, 36);
        std::vector<Real> m2 = moments_from_missing(t2, u);
        Real c2 = Real(8) * E - Real(4) * b * b;
        for (int p = 0; p + 4 <= 36; ++p) {
            Real rhs = (Real(4) * b * Real(1 + 2 * p) * m2[p + 3] + c2 * Real(p) * m2[p + 2] +
                        Real(p - 1) * (Real(p) * Real(p - 2) - Real(3)) * m2[p]) /
                       (Real(4) * Real(1 + p));
            Real scale = Real(1) + abs(m2[p + 4]);
            CHECK(abs(m2[p + 4] - rhs) < r10(-80) * scale);
        }
    }
}

TEST_CASE("psi2 exact ground sequence at b=0") {
    Real::set_precision(320);
    // moments of chi^{-3} Psi_gr^2 = e^{-chi^2}: u(p) = Gamma((p+1)/2) / 2
    Problem prob(Real(0), Representation::Psi2);
    GeneratorTable t = build_generator(prob, Real(2), 24);
    std::vector<Real> g(25);
    for (int p = 0; p <= 24; ++p) g[p] = tgamma((Real(p) + Real(1)) / Real(2)) / Real(2);
    Real norm = g[0] + g[1] + g[2] + g[3];
    MissingMomentVector u{{g[0] / norm, g[1] / norm, g[2] / norm, g[3] / norm}};
    std::vector<Real> m = moments_from_missing(t, u);
    for (int p = 0; p <= 24; ++p) CHECK(abs(m[p] - g[p] / norm) < r10(-85) * (Real(1) + g[p] / norm));
}

TEST_CASE("weight moments: recursion anchors and Gamma value") {
    Real::set_precision(320);
    WeightMoments w = weight_moments(Real(0), 12);
    CHECK(abs(w.omega[2] - Real("0.5") * w.omega[0]) < r10(-85));
    CHECK(abs(w.omega[3] - Real("1.5") * w.omega[1]) < r10(-85));
    Real w0 = tgamma(Real("0.25")) / sqrt(sqrt(Real(8)));  // 2^{-3/4} Gamma(1/4)
    CHECK(abs(w.omega[0] - w0) < r10(-90));

    // recursion agrees with direct quadrature for p <= 10
    for (int p = 0; p <= 10; ++p) {
        Real direct = halfint_gaussian_moment(p);
        CHECK(abs(w.omega[p] - direct) < r10(-15) * direct);
    }

    WeightMoments wb = weight_moments(Real("2.5"), 30);
    for (const Real& v : wb.omega) CHECK(v.sign() > 0);
    // spot-check the recursion against quadrature at b = 2.5
    Real direct5 = Real(2) * adaptive_gl(
                                [&](const Real& t) {
                                    return pow(t, 10) * exp(-pow(t * t - Real("2.5"), 2) / Real(2));
                                },
                                sqrt(Real(50)), r10(-100));
    CHECK(abs(wb.omega[5] - direct5) < r10(-80) * direct5);
}

TEST_CASE("exact b=0 energies") {
    Real::set_precision(320);
    CHECK(exact_b0_energy(0) == Real(2));
    CHECK(exact_b0_energy(3) == Real(8));
    CHECK(exact_b0_energy(9) == Real(20));
    CHECK_THROWS_AS(exact_b0_energy(-1), InvalidInputError);
}
