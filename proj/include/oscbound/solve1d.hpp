#ifndef OSCBOUND_SOLVE1D_HPP
#define OSCBOUND_SOLVE1D_HPP

#include <functional>
#include <utility>

#include "oscbound/real.hpp"

namespace oscb {

struct Bracket {
    Real lo, hi, tol;

    Bracket(Real lo_, Real hi_, Real tol_) : lo(std::move(lo_)), hi(std::move(hi_)), tol(std::move(tol_)) {}
    Real width() const { return hi - lo; }
};

// Boundary of a boolean predicate inside the bracket, returned with the final
// sub-bracket so callers can report the certified (outer) side.
struct BoundaryResult {
    Real point;
    Real lo_side;  // last point that evaluated like f(lo)
    Real hi_side;  // last point that evaluated like f(hi)
};

// Requires f(lo) != f(hi); shrinks monotonically until hi-lo <= tol.
BoundaryResult bisect_boundary(const std::function<bool(const Real&)>& f, const Bracket& bracket);

// Golden-section minimizer; the bracket must contain a single interior
// local minimum (throws NoInteriorMinimumError when the data disagree).
std::pair<Real, Real> golden_minimize(const std::function<Real(const Real&)>& f, const Bracket& bracket);

}  // namespace oscb

#endif
