#include "oscbound/mer.hpp"

#include <vector>

#include "oscbound/errors.hpp"
#include "oscbound/quadrature.hpp"

namespace oscb {

Problem::Problem(Real b_, Representation r, int sig) : b(std::move(b_)), rep(r), sigma(sig) {
    if (b.sign() < 0 || !b.is_finite()) throw InvalidInputError("Problem: b must be finite and >= 0");
    switch (rep) {
        case Representation::Psi:
        case Representation::Psi2:
        case Representation::Weight:
            break;
        case Representation::PsiChain:
            if (!b.is_zero()) throw InvalidInputError("Problem: parity chains exist only at b = 0");
            if (sigma != 0 && sigma != 1) throw InvalidInputError("Problem: chain sigma must be 0 or 1");
            break;
        case Representation::Phi:
            if (sigma != 0 && sigma != 3) throw InvalidInputError("Problem: phi sigma must be 0 or 3");
            break;
    }
}

int Problem::missing_order() const {
    switch (rep) {
        case Representation::Psi: return 3;
        case Representation::PsiChain: return 1;
        case Representation::Phi: return sigma == 3 ? 0 : 1;
        case Representation::Psi2: return 3;
        case Representation::Weight: return 0;
    }
    return 0;
}

namespace {

void check_divisor(const Real& den, const char* what) {
    if (den.is_zero()) throw DegenerateEnergyError(what);
}

}  // namespace

GeneratorTable build_generator(const Problem& problem, const Real& E, int pmax) {
    if (!E.is_finite()) throw InvalidInputError("build_generator: E not finite");
    const int ms = problem.missing_order();
    if (pmax < ms + 1) throw InvalidInputError("build_generator: pmax too small");

    GeneratorTable t;
    t.ms = ms;
    t.pmax = pmax;
    t.m.assign(static_cast<size_t>(pmax + 1) * (ms + 1), Real(0));
    for (int l = 0; l <= ms; ++l) t.at(l, l) = Real(1);

    const Real& b = problem.b;
    switch (problem.rep) {
        case Representation::Psi: {
            // u(p+4) = -beta u(p+3) + lam u(p+2) + (p(p-1) - 3/4) u(p)
            const Real beta = problem.beta();
            const Real lam = problem.lambda_of(E);
            for (int p = 0; p + 4 <= pmax; ++p) {
                Real cp = Real(p) * Real(p - 1) - Real(0.75);
                for (int l = 0; l <= ms; ++l)
                    t.at(p + 4, l) = -beta * t.at(p + 3, l) + lam * t.at(p + 2, l) + cp * t.at(p, l);
            }
            break;
        }
        case Representation::PsiChain: {
            // h(q+2) = 2E h(q+1) + ((2q+s)(2q+s-1) - 3/4) h(q)
            const int s = problem.sigma;
            const Real twoE = Real(2) * E;
            for (int q = 0; q + 2 <= pmax; ++q) {
                Real cq = Real(2 * q + s) * Real(2 * q + s - 1) - Real(0.75);
                for (int l = 0; l <= ms; ++l)
                    t.at(q + 2, l) = twoE * t.at(q + 1, l) + cq * t.at(q, l);
            }
            break;
        }
        case Representation::Phi: {
            if (problem.sigma == 0) {
                // (2E-1-2n) u(n+2) = -(n+1/2)(n-3/2) u(n) - 2bn u(n+1)
                for (int n = 0; n + 2 <= pmax; ++n) {
                    Real den = Real(2) * E - Real(1) - Real(2 * n);
                    check_divisor(den, "phi sigma=0: 2E-1-2n = 0");
                    Real c0 = -(Real(n) + Real(0.5)) * (Real(n) - Real(1.5));
                    Real c1 = Real(-2 * n) * b;
                    for (int l = 0; l <= ms; ++l)
                        t.at(n + 2, l) = (c0 * t.at(n, l) + c1 * t.at(n + 1, l)) / den;
                }
            } else {
                // tau chain: (2E-4) tau(1) = -3b tau(0);
                // (2E-4-2n) tau(n+1) = -n(n+2) tau(n-1) - 2b(n+3/2) tau(n)
                Real den = Real(2) * E - Real(4);
                check_divisor(den, "phi sigma=3: 2E-4 = 0");
                t.at(1, 0) = Real(-3) * b * t.at(0, 0) / den;
                for (int n = 1; n + 1 <= pmax; ++n) {
                    Real d = Real(2) * E - Real(4) - Real(2 * n);
                    check_divisor(d, "phi sigma=3: 2E-4-2n = 0");
                    Real c0 = Real(-n) * Real(n + 2);
                    Real c1 = Real(-2) * b * (Real(n) + Real(1.5));
                    t.at(n + 1, 0) = (c0 * t.at(n - 1, 0) + c1 * t.at(n, 0)) / d;
                }
            }
            break;
        }
        case Representation::Psi2: {
            // 4(1+p) u(p+4) = 4b(1+2p) u(p+3) + (8E-4b^2) p u(p+2)
            //                 + (p-1)(p(p-2)-3) u(p)
            const Real c2base = Real(8) * E - Real(4) * b * b;
            for (int p = 0; p + 4 <= pmax; ++p) {
                Real den = Real(4) * Real(1 + p);
                Real c3 = Real(4) * b * Real(1 + 2 * p);
                Real c2 = c2base * Real(p);
                Real c0 = Real(p - 1) * (Real(p) * Real(p - 2) - Real(3));
                for (int l = 0; l <= ms; ++l)
                    t.at(p + 4, l) = (c3 * t.at(p + 3, l) + c2 * t.at(p + 2, l) + c0 * t.at(p, l)) / den;
            }
            break;
        }
        case Representation::Weight:
            throw InvalidInputError("build_generator: use weight_moments for the weight");
    }
    return t;
}

std::vector<Real> moments_from_missing(const GeneratorTable& table, const MissingMomentVector& u) {
    if (static_cast<int>(u.u.size()) != table.ms + 1)
        throw InvalidInputError("moments_from_missing: dimension mismatch");
    std::vector<Real> out(table.pmax + 1, Real(0));
    for (int p = 0; p <= table.pmax; ++p) {
        Real s(0);
        for (int l = 0; l <= table.ms; ++l) s += table.at(p, l) * u.u[l];
        out[p] = s;
    }
    return out;
}

Real exact_b0_energy(int n) {
    if (n < 0) throw InvalidInputError("exact_b0_energy: n >= 0");
    return Real(2 * (n + 1));
}

Real adaptive_gl(const std::function<Real(const Real&)>& f, const Real& upper, const Real& rel_tol) {
    const GlRule& coarse = gl_rule(32);
    const GlRule& fine = gl_rule(64);

    auto panel = [&](const Real& a, const Real& b, const GlRule& r) {
        Real half = (b - a) / Real(2);
        Real mid = (a + b) / Real(2);
        Real s(0);
        for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(mid + half * r.x[i]);
        return s * half;
    };

    struct Seg {
        Real a, b, coarse_val;
        int depth;
    };
    std::vector<Seg> stack;
    stack.push_back({Real(0), upper, panel(Real(0), upper, coarse), 0});
    Real total(0);
    Real scale = abs(stack.back().coarse_val);
    while (!stack.empty()) {
        Seg s = std::move(stack.back());
        stack.pop_back();
        Real refined = panel(s.a, s.b, fine);
        scale = max(scale, abs(refined));
        if (abs(refined - s.coarse_val) <= rel_tol * max(scale, Real(1) * rel_tol) || s.depth > 60) {
            if (s.depth > 60) throw PrecisionError("adaptive_gl: panel refinement exhausted");
            total += refined;
        } else {
            Real mid = (s.a + s.b) / Real(2);
            stack.push_back({s.a, mid, panel(s.a, mid, coarse), s.depth + 1});
            stack.push_back({mid, s.b, panel(mid, s.b, coarse), s.depth + 1});
        }
    }
    return total;
}

WeightMoments weight_moments(const Real& b, int pmax) {
    if (b.sign() < 0) throw InvalidInputError("weight_moments: b >= 0");
    if (pmax < 1) throw InvalidInputError("weight_moments: pmax >= 1");

    // chi = t^2 removes the chi^{-1/2} endpoint singularity:
    //   omega(p) = 2 \int_0^T t^{2p} exp(-(t^2-b)^2/2) dt
    Real T = sqrt(b + Real(48));
    Real tol = Real::eps() * Real(1024);
    auto f0 = [&](const Real& t) { return exp(-(pow(t * t - b, 2)) / Real(2)); };
    auto f1 = [&](const Real& t) { return t * t * exp(-(pow(t * t - b, 2)) / Real(2)); };
    WeightMoments w;
    w.b = b;
    w.omega.resize(pmax + 1);
    w.omega[0] = Real(2) * adaptive_gl(f0, T, tol);
    w.omega[1] = Real(2) * adaptive_gl(f1, T, tol);
    for (int p = 0; p + 2 <= pmax; ++p)
        w.omega[p + 2] = (Real(p) + Real(0.5)) * w.omega[p] + b * w.omega[p + 1];
    for (const Real& v : w.omega)
        if (v.sign() <= 0 || !v.is_finite()) throw PrecisionError("weight_moments: nonpositive moment");
    return w;
}

}  // namespace oscb
