#include "oscbound/solve1d.hpp"

#include "oscbound/errors.hpp"

namespace oscb {

BoundaryResult bisect_boundary(const std::function<bool(const Real&)>& f, const Bracket& bracket) {
    if (!(bracket.lo < bracket.hi) || bracket.tol.sign() <= 0)
        throw InvalidInputError("bisect_boundary: need lo < hi and tol > 0");
    Real a = bracket.lo, b = bracket.hi;
    const bool fa = f(a);
    if (f(b) == fa) throw NoSignChangeError("bisect_boundary: f constant on bracket");

    while (b - a > bracket.tol) {
        Real mid = (a + b) / Real(2);
        if (mid <= a || mid >= b) break;  // bracket at machine resolution
        if (f(mid) == fa)
            a = mid;
        else
            b = mid;
    }
    BoundaryResult r;
    r.point = (a + b) / Real(2);
    r.lo_side = a;
    r.hi_side = b;
    return r;
}

std::pair<Real, Real> golden_minimize(const std::function<Real(const Real&)>& f, const Bracket& bracket) {
    if (!(bracket.lo < bracket.hi) || bracket.tol.sign() <= 0)
        throw InvalidInputError("golden_minimize: need lo < hi and tol > 0");
    const Real R = (sqrt(Real(5)) - Real(1)) / Real(2);
    Real a = bracket.lo, b = bracket.hi;
    Real c = b - R * (b - a);
    Real d = a + R * (b - a);
    Real fc = f(c), fd = f(d);
    const Real fa = f(a), fb = f(b);
    // monotone data cannot hold an interior minimum
    if (min(fc, fd) > max(fa, fb)) throw NoInteriorMinimumError("golden_minimize: no interior minimum");
    if (fa <= min(fc, fd) && fb >= max(fc, fd) && fc <= fd)
        throw NoInteriorMinimumError("golden_minimize: monotone increasing data");
    if (fb <= min(fc, fd) && fa >= max(fc, fd) && fd <= fc)
        throw NoInteriorMinimumError("golden_minimize: monotone decreasing data");

    while (b - a > bracket.tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - R * (b - a);
            if (c <= a || c >= b) break;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + R * (b - a);
            if (d <= a || d >= b) break;
            fd = f(d);
        }
    }
    Real x = (a + b) / Real(2);
    return {x, f(x)};
}

}  // namespace oscb
