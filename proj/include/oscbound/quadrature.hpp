#ifndef OSCBOUND_QUADRATURE_HPP
#define OSCBOUND_QUADRATURE_HPP

#include <vector>

#include "oscbound/real.hpp"

namespace oscb {

// Gauss-Legendre nodes/weights on [-1, 1] at working precision (Newton on
// the Legendre recurrence).
struct GlRule {
    std::vector<Real> x, w;
};

const GlRule& gl_rule(int n);  // cached per (n, precision)

}  // namespace oscb

#endif
