#ifndef OSCBOUND_EMM_HPP
#define OSCBOUND_EMM_HPP

#include <optional>
#include <vector>

#include "oscbound/mer.hpp"
#include "oscbound/solve1d.hpp"

namespace oscb {

enum class Method { EmmPsi, EmmPsiChain, EmmPhi, EmmPsi2, OppqBm };

// Certified (E_L, E_U) bracket with provenance.
struct EnergyInterval {
    Real lo, hi;
    Method method = Method::EmmPsi;
    int sigma = 0;
    int order = 0;  // P_max (EMM) or N (OPPQ-BM)
    int state = 0;
    long precision_bits = 0;

    Real width() const { return hi - lo; }
    bool contains(const Real& e) const { return lo <= e && e <= hi; }
};

enum class Verdict { Feasible, Infeasible, Indeterminate };

struct Feasibility {
    Verdict verdict = Verdict::Indeterminate;
    std::vector<Real> witness;  // present when feasible
};

// Hankel pair H_sigma(i,j) = nu(i+j+sigma), sigma = 0,1, entries linear in
// the missing moments through the generator table. P_max = highest moment
// index used; the sigma=0 matrix has order floor(P/2), sigma=1 floor((P-1)/2).
struct HHConstraintSet {
    const GeneratorTable* table;
    int pmax;

    int size(int sigma_shift) const { return (pmax - sigma_shift) / 2 + 1; }
};

// Per-energy feasibility: does a normalized missing-moment vector exist with
// both Hankel matrices positive definite? m_s = 0 representations reduce to a
// direct Cholesky check; otherwise cutting-plane LP (cut cap 500).
Feasibility feasible_at(const Problem& problem, const Real& E, int pmax);

// Same with the spec's Hankel-order parameterization (P_max = 2N + 1).
Feasibility feasible_at_hankel_order(const Problem& problem, const Real& E, int N);

// Certified ground-state bounds inside `scan` at order pmax. Uses a nested
// order cascade: the feasibility window is bisected at a low order first and
// each higher order is searched only inside the previous (slightly inflated)
// window, since the windows nest and shrink geometrically.
EnergyInterval ground_bounds(const Problem& problem, int pmax, const Bracket& scan);

// Psi^2 bounds for the `state`-th feasible island (ascending E) in `scan`;
// scan must start below the ground state so island k corresponds to state k.
EnergyInterval psi2_state_bounds(const Real& b, int state, int pmax, const Bracket& scan);

// 1/2 < E_gr <= 2 for every b >= 0
bool algebraic_ground_check(const Real& E_gr, const Real& b);

}  // namespace oscb

#endif
