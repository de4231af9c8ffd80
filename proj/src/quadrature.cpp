#include "oscbound/quadrature.hpp"

#include <map>
#include <mutex>

namespace oscb {

namespace {

GlRule compute_rule(int n) {
    GlRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const Real one(1);
    Real pi_val;
    mpfr_const_pi(pi_val.raw(), MPFR_RNDN);
    const Real conv = Real::eps() * Real(256);
    for (int i = 1; i <= n; ++i) {
        // Chebyshev-like initial guess
        Real x;
        {
            Real arg = pi_val * (Real(i) - Real(0.25)) / (Real(n) + Real(0.5));
            mpfr_cos(x.raw(), arg.raw(), MPFR_RNDN);
        }
        Real dp;
        for (int it = 0; it < 200; ++it) {
            Real p0(1), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = (Real(2 * k - 1) * x * p1 - Real(k - 1) * p0) / Real(k);
                p0 = p1;
                p1 = p2;
            }
            dp = Real(n) * (x * p1 - p0) / (x * x - one);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) <= conv * max(abs(x), one)) {
                // one last recurrence pass for dp at the converged node
                Real q0(1), q1 = x;
                for (int k = 2; k <= n; ++k) {
                    Real q2 = (Real(2 * k - 1) * x * q1 - Real(k - 1) * q0) / Real(k);
                    q0 = q1;
                    q1 = q2;
                }
                dp = Real(n) * (x * q1 - q0) / (x * x - one);
                break;
            }
        }
        rule.x[i - 1] = x;
        rule.w[i - 1] = Real(2) / ((one - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GlRule& gl_rule(int n) {
    static std::mutex mtx;
    static std::map<std::pair<int, long>, GlRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, Real::internal_bits());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_rule(n)).first;
    return it->second;
}

}  // namespace oscb
