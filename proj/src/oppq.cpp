#include "oscbound/oppq.hpp"

#include <cmath>

#include "oscbound/errors.hpp"
#include "oscbound/linalg.hpp"
#include "oscbound/quadrature.hpp"
#include "oscbound/util.hpp"

namespace oscb {

namespace {

// upper chi cutoff: chi^{2N} R(chi) below peak * 2^-(prec+24) past X
double weight_cutoff(double b, int N, long prec_bits) {
    double logpeak;
    {
        double cs = b / 2 + std::sqrt(b * b / 4 + 2.0 * N);
        logpeak = 2.0 * N * std::log(std::max(cs, 1.0)) - (cs - b) * (cs - b) / 2;
    }
    double need = logpeak - (prec_bits + 24) * 0.6931471805599453;
    double X = b + 8 + 2 * std::sqrt(2.0 * N);
    while (2.0 * N * std::log(X) - (X - b) * (X - b) / 2 > need) X += 2;
    return X;
}

struct DiscreteWeight {
    std::vector<Real> chi, w;
};

DiscreteWeight discretize(const Real& b, int N, int K) {
    double X = weight_cutoff(b.to_double(), std::max(2 * N, 2), Real::internal_bits());
    Real T = sqrt(Real(X));
    const GlRule& rule = gl_rule(K);
    DiscreteWeight d;
    d.chi.resize(K);
    d.w.resize(K);
    Real half = T / Real(2);
    for (int i = 0; i < K; ++i) {
        Real t = half * (rule.x[i] + Real(1));
        Real c = t * t;
        d.chi[i] = c;
        d.w[i] = Real(2) * half * rule.w[i] * exp(-pow(c - b, 2) / Real(2));
    }
    return d;
}

bool moments_match(const DiscreteWeight& d, const WeightMoments& w, int pmax_check) {
    Real tol = Real::eps() * Real(1 << 24);
    for (int p : {0, 1, 2, pmax_check / 2, pmax_check}) {
        Real s(0);
        for (size_t i = 0; i < d.chi.size(); ++i) s += d.w[i] * pow(d.chi[i], p);
        if (abs(s - w.omega[p]) > tol * w.omega[p]) return false;
    }
    return true;
}

}  // namespace

std::vector<Real> OrthoBasis::eval(const Real& chi) const {
    std::vector<Real> p(N);
    p[0] = Real(1) / sqrt(weight.omega[0]);
    if (N > 1) p[1] = (chi - alpha[0]) * p[0] / gamma[1];
    for (int n = 1; n + 1 < N; ++n)
        p[n + 1] = ((chi - alpha[n]) * p[n] - gamma[n] * p[n - 1]) / gamma[n + 1];
    return p;
}

OrthoBasis build_basis(const WeightMoments& weight, int N) {
    if (N < 1) throw InvalidInputError("build_basis: N >= 1");
    if (weight.pmax() < 2 * N - 2) throw InvalidInputError("build_basis: omega too short");

    // discretized Stieltjes procedure; K validated against the omega
    // recursion and doubled until the rule is converged at working precision
    int K = 4 * N + static_cast<int>(9 * Real::internal_bits() * 0.30103) + 64;
    DiscreteWeight d;
    bool ok = false;
    for (int attempt = 0; attempt < 4 && !ok; ++attempt, K *= 2) {
        d = discretize(weight.b, N, K);
        ok = moments_match(d, weight, std::min(weight.pmax(), 2 * N - 2));
    }
    if (!ok) throw PrecisionError("build_basis: quadrature rule failed to converge");

    const int Kn = static_cast<int>(d.chi.size());
    OrthoBasis basis;
    basis.N = N;
    basis.b = weight.b;
    basis.weight = weight;
    basis.alpha.assign(N, Real(0));
    basis.gamma.assign(N, Real(0));

    Real m0(0);
    for (int i = 0; i < Kn; ++i) m0 += d.w[i];
    std::vector<Real> p_prev(Kn, Real(0)), p_cur(Kn, Real(1) / sqrt(m0));
    for (int n = 0; n < N; ++n) {
        Real a(0);
        for (int i = 0; i < Kn; ++i) a += d.w[i] * d.chi[i] * p_cur[i] * p_cur[i];
        basis.alpha[n] = a;
        if (n + 1 == N) break;
        std::vector<Real> q(Kn);
        for (int i = 0; i < Kn; ++i) q[i] = (d.chi[i] - a) * p_cur[i] - basis.gamma[n] * p_prev[i];
        Real g2(0);
        for (int i = 0; i < Kn; ++i) g2 += d.w[i] * q[i] * q[i];
        if (g2.sign() <= 0) throw PrecisionError("build_basis: lost positivity in recurrence");
        Real g = sqrt(g2);
        basis.gamma[n + 1] = g;
        p_prev = std::move(p_cur);
        p_cur.resize(Kn);
        for (int i = 0; i < Kn; ++i) p_cur[i] = q[i] / g;
    }

    // monomial coefficients by the same recurrence
    basis.xi.assign(N, {});
    for (int n = 0; n < N; ++n) basis.xi[n].assign(n + 1, Real(0));
    basis.xi[0][0] = Real(1) / sqrt(m0);
    for (int n = 0; n + 1 < N; ++n) {
        for (int j = 0; j <= n + 1; ++j) {
            Real v(0);
            if (j >= 1) v += basis.xi[n][j - 1];
            if (j <= n) v -= basis.alpha[n] * basis.xi[n][j];
            if (n >= 1 && j <= n - 1) v -= basis.gamma[n] * basis.xi[n - 1][j];
            basis.xi[n + 1][j] = v / basis.gamma[n + 1];
        }
    }
    return basis;
}

LambdaTable lambda_table(const Problem& problem, const Real& E, const OrthoBasis& basis, int nmax) {
    if (problem.rep != Representation::Psi)
        throw InvalidInputError("lambda_table: OPPQ runs on the Psi representation");
    if (nmax >= basis.N) throw InvalidInputError("lambda_table: basis too small");
    GeneratorTable t = build_generator(problem, E, nmax);
    LambdaTable lt;
    lt.E = E;
    lt.ms = t.ms;
    lt.rows.assign(nmax + 1, {});
    for (int n = 0; n <= nmax; ++n) {
        lt.rows[n].assign(t.ms + 1, Real(0));
        for (int l = 0; l <= t.ms; ++l) {
            Real s(0);
            for (int j = 0; j <= n; ++j) s += basis.xi[n][j] * t.at(j, l);
            lt.rows[n][l] = s;
        }
    }
    return lt;
}

namespace {

Real det4(const std::vector<std::vector<Real>>& a) {
    auto det3 = [](const Real m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    Real d(0);
    for (int c = 0; c < 4; ++c) {
        Real minor[3][3];
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int k = 0; k < 4; ++k) {
                if (k == c) continue;
                minor[r - 1][cc++] = a[r][k];
            }
        }
        Real term = a[0][c] * det3(minor);
        if (c % 2)
            d -= term;
        else
            d += term;
    }
    return d;
}

}  // namespace

Real am_determinant(const Problem& problem, const Real& E, const OrthoBasis& basis, int N) {
    if (problem.rep != Representation::Psi)
        throw InvalidInputError("am_determinant: OPPQ runs on the Psi representation");
    if (N < 3 || N >= basis.N) throw InvalidInputError("am_determinant: need 3 <= N < basis size");
    GeneratorTable t = build_generator(problem, E, N);
    std::vector<std::vector<Real>> rows(4, std::vector<Real>(4, Real(0)));
    for (int l1 = 0; l1 < 4; ++l1) {
        int n = N - l1;
        for (int l = 0; l < 4; ++l) {
            Real s(0);
            for (int j = 0; j <= n; ++j) s += basis.xi[n][j] * t.at(j, l);
            rows[l1][l] = s;
        }
    }
    return det4(rows);
}

std::vector<Real> am_energies(const Problem& problem, int N, const OrthoBasis& basis, const Bracket& scan,
                              int grid_points) {
    std::vector<Real> es(grid_points + 1), vals(grid_points + 1);
    parallel_for(grid_points + 1, [&](int k) {
        es[k] = scan.lo + (scan.hi - scan.lo) * Real(k) / Real(grid_points);
        vals[k] = am_determinant(problem, es[k], basis, N);
    });
    std::vector<Real> roots;
    for (int k = 0; k < grid_points; ++k) {
        if (vals[k].is_zero()) {
            roots.push_back(es[k]);
            continue;
        }
        if ((vals[k].sign() > 0) == (vals[k + 1].sign() > 0)) continue;
        bool lo_pos = vals[k].sign() > 0;
        auto pred = [&](const Real& e) { return (am_determinant(problem, e, basis, N).sign() > 0) == lo_pos; };
        Real tol = max(abs(es[k]), Real(1)) * scan.tol;
        Real a = es[k], b = es[k + 1];
        while (b - a > tol) {
            Real mid = (a + b) / Real(2);
            if (mid <= a || mid >= b) break;
            if (pred(mid))
                a = mid;
            else
                b = mid;
        }
        roots.push_back((a + b) / Real(2));
    }
    // merge grid-adjacent duplicates
    std::vector<Real> out;
    for (const Real& r : roots)
        if (out.empty() || r - out.back() > max(abs(r), Real(1)) * scan.tol * Real(16)) out.push_back(r);
    return out;
}

Real bm_lambda(const Problem& problem, const Real& E, int N, const OrthoBasis& basis) {
    LambdaTable lt = lambda_table(problem, E, basis, N);
    const int m = lt.ms + 1;
    SymMatrix P(m);
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j <= i; ++j) P.at(i, j) += lt.rows[n][i] * lt.rows[n][j];
    Real scale(0);
    for (int i = 0; i < m; ++i) scale = max(scale, P.at(i, i));
    EigenPair ep = smallest_eigenpair(P);
    Real floor_val = scale * Real::eps() * Real(1L << 48);
    if (ep.value <= floor_val)
        throw PrecisionError("bm_lambda: smallest eigenvalue below noise floor; raise precision");
    return ep.value;
}

Eigencurve bm_curve(const Problem& problem, int N, const OrthoBasis& basis, const std::vector<Real>& grid,
                    const Real& refine_tol) {
    Eigencurve curve;
    curve.N = N;
    const int n = static_cast<int>(grid.size());
    curve.samples.resize(n);
    parallel_for(n, [&](int k) { curve.samples[k] = {grid[k], bm_lambda(problem, grid[k], N, basis)}; });

    auto f = [&](const Real& e) { return bm_lambda(problem, e, N, basis); };
    for (int k = 1; k + 1 < n; ++k) {
        const Real& lk = curve.samples[k].second;
        if (lk < curve.samples[k - 1].second && lk < curve.samples[k + 1].second) {
            auto [emin, lmin] =
                golden_minimize(f, Bracket(curve.samples[k - 1].first, curve.samples[k + 1].first, refine_tol));
            curve.minima.push_back({emin, lmin, 0});
        }
    }
    // a wall of lambda >= 10x both neighbors must separate distinct minima
    std::vector<Eigencurve::Minimum> kept;
    for (const auto& m : curve.minima) {
        if (!kept.empty()) {
            Real wall(0);
            for (const auto& s : curve.samples)
                if (s.first > kept.back().E && s.first < m.E) wall = max(wall, s.second);
            if (wall < Real(10) * max(kept.back().lambda, m.lambda)) {
                if (m.lambda < kept.back().lambda) kept.back() = m;
                continue;
            }
        }
        kept.push_back(m);
    }
    for (size_t i = 0; i < kept.size(); ++i) kept[i].state = static_cast<int>(i);
    curve.minima = std::move(kept);
    return curve;
}

EnergyInterval bm_bounds(const Problem& problem, int state, int N, const OrthoBasis& basis, const Real& B_U,
                         const Bracket& window) {
    auto f = [&](const Real& e) { return bm_lambda(problem, e, N, basis); };
    // locate the single minimum inside the window
    const int coarse = 160;
    std::vector<Real> es(coarse + 1), ls(coarse + 1);
    parallel_for(coarse + 1, [&](int k) {
        es[k] = window.lo + (window.hi - window.lo) * Real(k) / Real(coarse);
        ls[k] = f(es[k]);
    });
    int kmin = 0;
    for (int k = 1; k <= coarse; ++k)
        if (ls[k] < ls[kmin]) kmin = k;
    if (kmin == 0 || kmin == coarse)
        throw InvalidInputError("bm_bounds: window does not bracket a minimum");
    auto [emin, lmin] = golden_minimize(f, Bracket(es[kmin - 1], es[kmin + 1], window.tol));
    if (!(lmin < B_U)) throw InvalidBoundError("bm_bounds: B_U at or below the current minimum value");

    auto above = [&](const Real& e) { return f(e) > B_U; };
    // expand to certified-outside points
    Real lo_out = es[kmin], hi_out = es[kmin];
    {
        Real step = (window.hi - window.lo) / Real(coarse);
        lo_out = emin - step;
        while (!above(lo_out)) {
            step *= Real(2);
            lo_out -= step;
            if (lo_out < window.lo) {
                lo_out = window.lo;
                if (!above(lo_out)) throw InvalidInputError("bm_bounds: lambda below B_U at window edge");
                break;
            }
        }
        step = (window.hi - window.lo) / Real(coarse);
        hi_out = emin + step;
        while (!above(hi_out)) {
            step *= Real(2);
            hi_out += step;
            if (hi_out > window.hi) {
                hi_out = window.hi;
                if (!above(hi_out)) throw InvalidInputError("bm_bounds: lambda below B_U at window edge");
                break;
            }
        }
    }
    BoundaryResult left = bisect_boundary(above, Bracket(lo_out, emin, window.tol));
    BoundaryResult right = bisect_boundary([&](const Real& e) { return !above(e); }, Bracket(emin, hi_out, window.tol));

    EnergyInterval out;
    out.lo = left.lo_side;   // outer: lambda > B_U below
    out.hi = right.hi_side;  // outer: lambda > B_U above
    out.method = Method::OppqBm;
    out.order = N;
    out.state = state;
    out.precision_bits = Real::precision();
    return out;
}

ReconstructedState reconstruct(const Problem& problem, const Real& E, int N, const OrthoBasis& basis,
                               const std::vector<Real>& grid, int coeff_cap) {
    if (problem.rep != Representation::Psi)
        throw InvalidInputError("reconstruct: OPPQ runs on the Psi representation");
    // missing moments from the AM matrix's smallest singular direction
    GeneratorTable t = build_generator(problem, E, N);
    std::vector<std::vector<Real>> A(4, std::vector<Real>(4, Real(0)));
    for (int l1 = 0; l1 < 4; ++l1) {
        int n = N - l1;
        for (int l = 0; l < 4; ++l) {
            Real s(0);
            for (int j = 0; j <= n; ++j) s += basis.xi[n][j] * t.at(j, l);
            A[l1][l] = s;
        }
    }
    SymMatrix AtA(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= i; ++j) {
            Real s(0);
            for (int r = 0; r < 4; ++r) s += A[r][i] * A[r][j];
            AtA.at(i, j) = s;
        }
    EigenPair null_dir = smallest_eigenpair(AtA);
    {
        Real scale(0);
        for (int i = 0; i < 4; ++i) scale = max(scale, AtA.at(i, i));
        Real lam1 = max(null_dir.value, scale * Real::eps() * Real::eps());
        if (eigenvalues_below(AtA, lam1 * Real(1e8)) >= 2)
            throw AmbiguousStateError("reconstruct: two small singular values at this energy");
    }

    ReconstructedState st;
    st.E = E;
    st.u = null_dir.vector;
    Real usum(0);
    for (const Real& v : st.u) usum += v;
    if (usum.is_zero()) throw AmbiguousStateError("reconstruct: null vector orthogonal to the slice");
    for (Real& v : st.u) v /= usum;

    int cap = std::min(coeff_cap, basis.N);
    st.coeffs.assign(cap, Real(0));
    for (int n = 0; n < cap; ++n) {
        Real c(0);
        for (int l = 0; l < 4; ++l) {
            Real s(0);
            for (int j = 0; j <= n; ++j) s += basis.xi[n][j] * t.at(j, l);
            c += s * st.u[l];
        }
        st.coeffs[n] = c;
    }

    st.grid = grid;
    st.values.assign(grid.size(), Real(0));
    for (size_t i = 0; i < grid.size(); ++i) {
        const Real& chi = grid[i];
        if (chi.sign() < 0) throw InvalidInputError("reconstruct: grid must satisfy chi >= 0");
        if (chi.is_zero()) continue;  // boundary value
        Real Rchi = exp(-pow(chi - problem.b, 2) / Real(2)) / sqrt(chi);
        std::vector<Real> p = basis.eval(chi);
        Real s(0);
        for (int n = 0; n < cap; ++n) s += st.coeffs[n] * p[n];
        st.values[i] = chi * chi * s * Rchi;
    }
    // L2 normalization on the grid (trapezoid)
    Real nrm(0);
    for (size_t i = 0; i + 1 < grid.size(); ++i)
        nrm += (st.values[i] * st.values[i] + st.values[i + 1] * st.values[i + 1]) / Real(2) *
               (grid[i + 1] - grid[i]);
    nrm = sqrt(nrm);
    if (nrm.is_zero()) throw AmbiguousStateError("reconstruct: zero state on grid");
    for (Real& v : st.values) v /= nrm;
    // sign: first antinode positive
    Real vmax(0);
    for (const Real& v : st.values) vmax = max(vmax, abs(v));
    for (const Real& v : st.values) {
        if (abs(v) > vmax / Real(4)) {
            if (v.sign() < 0)
                for (Real& x : st.values) x = -x;
            break;
        }
    }
    return st;
}

std::vector<std::vector<Real>> sweep_energies(const std::vector<Real>& b_list, int n_max, int N) {
    std::vector<std::vector<Real>> table(b_list.size());
    for (size_t i = 0; i < b_list.size(); ++i) {
        WeightMoments w = weight_moments(b_list[i], 2 * N + 2);
        OrthoBasis basis = build_basis(w, N + 1);
        Problem problem(b_list[i], Representation::Psi);
        Bracket scan(Real(0.3), Real(2 * (n_max + 1)) + Real(1.5), Real(1e-13));
        std::vector<Real> roots = am_energies(problem, N, basis, scan);
        if (static_cast<int>(roots.size()) < n_max + 1)
            throw EmptyWindowError("sweep_energies: fewer roots than states requested");
        roots.resize(n_max + 1);
        table[i] = std::move(roots);
    }
    return table;
}

}  // namespace oscb
