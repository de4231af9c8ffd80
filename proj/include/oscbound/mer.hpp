#ifndef OSCBOUND_MER_HPP
#define OSCBOUND_MER_HPP

#include <functional>
#include <vector>

#include "oscbound/real.hpp"

namespace oscb {

// Configuration-space representation the moment recursion is written in.
//  Psi      : u(p) = ∫ χ^p χ^{-2} Ψ dχ, order-4 recursion, m_s = 3
//  PsiChain : b = 0 only; decoupled parity chain h_σ(q) = u(2q+σ), m_s = 1
//  Phi      : Φ = e^{-(χ-b)²/2} Ψ; σ = 0 gives m_s = 1, σ = 3 gives the
//             τ-chain with m_s = 0
//  Psi2     : S = Ψ², u(p) = ∫ χ^p χ^{-3} S dχ, m_s = 3
//  Weight   : the OPPQ weight R(χ) = χ^{-1/2} e^{-(χ-b)²/2} itself
enum class Representation { Psi, PsiChain, Phi, Psi2, Weight };

struct Problem {
    Real b;
    Representation rep = Representation::Psi;
    int sigma = 0;  // PsiChain: {0,1}; Phi: {0,3}

    Problem(Real b_, Representation r, int sig = 0);

    int missing_order() const;  // m_s
    Real beta() const { return Real(-2) * b; }
    Real lambda_of(const Real& E) const { return Real(2) * E - b * b; }
};

// Closed-form coefficients M_E(p, l) expressing every moment of the chosen
// representation linearly in the m_s + 1 initialization moments. Rows
// 0..m_s are the identity block; later rows satisfy the recursion exactly.
struct GeneratorTable {
    int ms = 0;
    int pmax = 0;
    std::vector<Real> m;  // (pmax+1) x (ms+1), row-major

    const Real& at(int p, int l) const { return m[static_cast<size_t>(p) * (ms + 1) + l]; }
    Real& at(int p, int l) { return m[static_cast<size_t>(p) * (ms + 1) + l]; }
};

struct MissingMomentVector {
    std::vector<Real> u;  // m_s + 1 entries, sum = 1
};

GeneratorTable build_generator(const Problem& problem, const Real& E, int pmax);

std::vector<Real> moments_from_missing(const GeneratorTable& table, const MissingMomentVector& u);

// E_n(b = 0) = 2(n + 1)
Real exact_b0_energy(int n);

// Moments of the weight R(χ) = χ^{-1/2} exp(-(χ-b)²/2): ω(0), ω(1) by
// quadrature, the rest by ω(p+2) = (p + 1/2) ω(p) + b ω(p+1).
struct WeightMoments {
    Real b;
    std::vector<Real> omega;  // ω(0..pmax)

    int pmax() const { return static_cast<int>(omega.size()) - 1; }
};

WeightMoments weight_moments(const Real& b, int pmax);

// ∫_0^∞ f(t) dt over [0, upper] by panel-adaptive Gauss–Legendre (exposed
// for the quadrature-based test oracles).
Real adaptive_gl(const std::function<Real(const Real&)>& f, const Real& upper, const Real& rel_tol);

}  // namespace oscb

#endif
