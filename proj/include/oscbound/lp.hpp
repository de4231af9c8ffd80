#ifndef OSCBOUND_LP_HPP
#define OSCBOUND_LP_HPP

#include <vector>

#include "oscbound/real.hpp"

namespace oscb {

// Linear inequality a.u > 0 over missing-moment space.
struct LinearInequality {
    std::vector<Real> a;
};

struct LpResult {
    bool feasible = false;    // max-min-slack > 0
    std::vector<Real> u;      // point on the slice sum(u) = 1
    Real min_slack;           // optimal t (normalized slack)
};

// Maximize the minimum normalized slack of aᵀu over the affine slice
// sum_l u_l = 1. Solved through the dual (dim rows, one column per cut)
// with Bland's rule; new cuts append as dual columns so re-solves warm-start.
class SlackProgram {
  public:
    explicit SlackProgram(int dim);

    void add(const LinearInequality& cut);
    int size() const { return static_cast<int>(cost_.size()); }

    LpResult solve();

  private:
    int m_;                                  // dual rows = dim
    std::vector<std::vector<Real>> cols_;    // dual columns
    std::vector<Real> cost_;
    std::vector<int> basis_;                 // warm-start basis (may be empty)
};

// One-shot form of the above.
LpResult lp_interior(const std::vector<LinearInequality>& ineqs, int dim);

}  // namespace oscb

#endif
