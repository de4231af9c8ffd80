#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oscbound/errors.hpp"
#include "oscbound/linalg.hpp"
#include "oscbound/lp.hpp"
#include "oscbound/mer.hpp"
#include "oscbound/real.hpp"
#include "oscbound/solve1d.hpp"

using namespace oscb;

namespace {
Real r10(int k) { return pow10(Real(k)); }
}

TEST_CASE("Real basics") {
    Real::set_precision(320);
    CHECK(Real::decimal_digits() >= 96);
    Real x("0.1");
    CHECK(Real(x.str(20)) == Real("0.1"));  // decimal round-trips at 20 digits
    Real y = Real::from_hex(x.hex());
    CHECK(x == y);
    CHECK((Real(2) + Real(3) * Real(4)) == Real(14));
    CHECK(sqrt(Real(16)) == Real(4));
    CHECK(abs(log10(r10(-37)) + Real(37)) < r10(-90));
    CHECK(Real::eps() < r10(-110));
    CHECK_THROWS_AS(Real::set_precision(64), std::invalid_argument);
    Real::set_precision(320);
}

TEST_CASE("cholesky identity and 2x2") {
    Real::set_precision(320);
    SymMatrix I(3);
    for (int i = 0; i < 3; ++i) I.at(i, i) = Real(1);
    CholeskyResult r = cholesky(I);
    REQUIRE(r.ok);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= i; ++j) CHECK(r.lower.at(i, j) == (i == j ? Real(1) : Real(0)));

    SymMatrix A(2);
    A.at(0, 0) = Real(4);
    A.at(1, 0) = Real(2);
    A.at(1, 1) = Real(5);
    r = cholesky(A);
    REQUIRE(r.ok);
    CHECK(r.lower.at(0, 0) == Real(2));
    CHECK(r.lower.at(1, 0) == Real(1));
    CHECK(r.lower.at(1, 1) == Real(2));
}

TEST_CASE("cholesky recovers a random factor") {
    Real::set_precision(320);
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(0.1, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        LowerTriangular L;
        L.dim = n;
        L.a.assign(static_cast<size_t>(n) * (n + 1) / 2, Real(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) L.at(i, j) = Real(dist(rng) - 1.05);
        for (int i = 0; i < n; ++i) L.at(i, i) = Real(dist(rng));
        SymMatrix A(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                Real s(0);
                for (int k = 0; k <= j; ++k) s += L.at(i, k) * L.at(j, k);
                A.at(i, j) = s;
            }
        CholeskyResult r = cholesky(A);
        REQUIRE(r.ok);
        Real tol = r10(-(static_cast<int>(Real::decimal_digits()) - 10));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) CHECK(abs(r.lower.at(i, j) - L.at(i, j)) < tol);
    }
}

TEST_CASE("cholesky failure carries a violating direction") {
    Real::set_precision(320);
    SymMatrix A(3);
    A.at(0, 0) = Real(2);
    A.at(1, 0) = Real(3);
    A.at(1, 1) = Real(1);
    A.at(2, 0) = Real(0);
    A.at(2, 1) = Real(1);
    A.at(2, 2) = Real(4);
    CholeskyResult r = cholesky(A);
    REQUIRE_FALSE(r.ok);
    REQUIRE(static_cast<int>(r.direction.size()) == 3);
    Real q(0), nrm(0);
    for (int i = 0; i < 3; ++i) {
        nrm += r.direction[i] * r.direction[i];
        for (int j = 0; j < 3; ++j) q += r.direction[i] * A.at(i, j) * r.direction[j];
    }
    CHECK(q.sign() <= 0);
    CHECK(abs(nrm - Real(1)) < r10(-80));
}

TEST_CASE("hankel of b=0 weight moments is positive definite") {
    Real::set_precision(320);
    // quadrature oracle for omega(p) = int chi^p chi^{-1/2} e^{-chi^2/2}
    auto omega = [&](int p) {
        return Real(2) * adaptive_gl([&](const Real& t) { return pow(t, 2 * p) * exp(-pow(t, 4) / Real(2)); },
                                     sqrt(Real(44)), r10(-100));
    };
    SymMatrix H(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= i; ++j) H.at(i, j) = omega(i + j);
    CHECK(cholesky(H).ok);
    EigenPair ep = smallest_eigenpair(H);
    CHECK(ep.value.sign() > 0);
}

TEST_CASE("smallest_eigenpair diagonal and dyad") {
    Real::set_precision(320);
    SymMatrix D(3);
    D.at(0, 0) = Real(1);
    D.at(1, 1) = Real(2);
    D.at(2, 2) = Real(3);
    EigenPair ep = smallest_eigenpair(D);
    CHECK(abs(ep.value - Real(1)) < r10(-48));
    CHECK(abs(abs(ep.vector[0]) - Real(1)) < r10(-40));

    // rank-1 dyad: smallest eigenvalue 0, eigenvector orthogonal to v
    std::vector<Real> v = {Real(3), Real(1), Real(-2), Real("0.5")};
    SymMatrix P(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= i; ++j) P.at(i, j) = v[i] * v[j];
    ep = smallest_eigenpair(P);
    CHECK(abs(ep.value) < r10(-48));
    Real dot(0);
    for (int i = 0; i < 4; ++i) dot += ep.vector[i] * v[i];
    CHECK(abs(dot) < r10(-40));
}

TEST_CASE("smallest_eigenpair recovers a known spectrum") {
    Real::set_precision(320);
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 4; ++trial) {
        const int n = 5;
        // diagonal conjugated by a product of random Givens rotations
        std::vector<Real> d = {Real("0.25"), Real(1), Real(3), Real(7), Real(11)};
        std::vector<std::vector<Real>> M(n, std::vector<Real>(n, Real(0)));
        for (int i = 0; i < n; ++i) M[i][i] = d[i];
        for (int rot = 0; rot < 12; ++rot) {
            int i = static_cast<int>(rng() % n);
            int j = (i + 1 + static_cast<int>(rng() % (n - 1))) % n;
            Real theta(dist(rng));
            Real c, s;
            mpfr_cos(c.raw(), theta.raw(), MPFR_RNDN);
            mpfr_sin(s.raw(), theta.raw(), MPFR_RNDN);
            // M <- G^T M G on rows/cols i, j
            for (int k = 0; k < n; ++k) {
                Real a = M[i][k], b = M[j][k];
                M[i][k] = c * a + s * b;
                M[j][k] = -s * a + c * b;
            }
            for (int k = 0; k < n; ++k) {
                Real a = M[k][i], b = M[k][j];
                M[k][i] = c * a + s * b;
                M[k][j] = -s * a + c * b;
            }
        }
        SymMatrix A(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) A.at(i, j) = (M[i][j] + M[j][i]) / Real(2);
        EigenPair ep = smallest_eigenpair(A);
        CHECK(abs(ep.value - Real("0.25")) < r10(-static_cast<int>(Real::decimal_digits() / 2)));
        // residual |Ax - lambda x|
        Real res(0);
        for (int i = 0; i < n; ++i) {
            Real row(0);
            for (int j = 0; j < n; ++j) row += A.at(i, j) * ep.vector[j];
            row -= ep.value * ep.vector[i];
            res += row * row;
        }
        CHECK(sqrt(res) < r10(-static_cast<int>(Real::decimal_digits() / 2)));
    }
}

TEST_CASE("lp_interior symmetric and contradictory cuts") {
    Real::set_precision(320);
    std::vector<LinearInequality> ineqs;
    ineqs.push_back({{Real(1), Real(0)}});
    ineqs.push_back({{Real(0), Real(1)}});
    LpResult r = lp_interior(ineqs, 2);
    REQUIRE(r.feasible);
    CHECK(abs(r.u[0] - Real("0.5")) < r10(-60));
    CHECK(abs(r.u[1] - Real("0.5")) < r10(-60));

    ineqs.clear();
    ineqs.push_back({{Real(1), Real(-1)}});
    ineqs.push_back({{Real(-1), Real(1)}});
    r = lp_interior(ineqs, 2);
    CHECK_FALSE(r.feasible);
}

TEST_CASE("lp_interior point satisfies every cut strictly") {
    Real::set_precision(320);
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    int feasible_seen = 0;
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<LinearInequality> ineqs;
        for (int l = 0; l < 4; ++l) {
            LinearInequality e;
            e.a.assign(4, Real(0));
            e.a[l] = Real(1);
            ineqs.push_back(e);
        }
        for (int k = 0; k < 24; ++k) {
            LinearInequality c;
            c.a = {Real(dist(rng) + 0.35), Real(dist(rng) + 0.35), Real(dist(rng) + 0.35),
                   Real(dist(rng) + 0.35)};
            ineqs.push_back(c);
        }
        LpResult r = lp_interior(ineqs, 4);
        if (!r.feasible) continue;
        ++feasible_seen;
        Real sum(0);
        for (const Real& v : r.u) sum += v;
        CHECK(abs(sum - Real(1)) < r10(-70));
        for (const auto& q : ineqs) {
            Real s(0);
            for (int i = 0; i < 4; ++i) s += q.a[i] * r.u[i];
            CHECK(s.sign() > 0);
        }
    }
    CHECK(feasible_seen > 0);
}

TEST_CASE("bisect_boundary step function and bracket-halving invariance") {
    Real::set_precision(320);
    auto f = [](const Real& e) { return e < Real(2); };
    BoundaryResult r = bisect_boundary(f, Bracket(Real(1), Real(3), r10(-10)));
    CHECK(abs(r.point - Real(2)) < r10(-10));

    BoundaryResult r2 = bisect_boundary(f, Bracket(Real("1.5"), Real("2.5"), r10(-10)));
    CHECK(abs(r.point - r2.point) < Real(2) * r10(-10));

    CHECK_THROWS_AS(bisect_boundary([](const Real&) { return true; }, Bracket(Real(0), Real(1), r10(-10))),
                    NoSignChangeError);
}

TEST_CASE("golden_minimize quadratic and monotone error") {
    Real::set_precision(320);
    auto f = [](const Real& e) { return (e - Real(3)) * (e - Real(3)); };
    auto [x, fx] = golden_minimize(f, Bracket(Real(0), Real(10), r10(-20)));
    CHECK(abs(x - Real(3)) < r10(-19));
    CHECK(fx < r10(-36));

    CHECK_THROWS_AS(golden_minimize([](const Real& e) { return e; }, Bracket(Real(0), Real(1), r10(-10))),
                    NoInteriorMinimumError);
}
