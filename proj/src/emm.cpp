#include "oscbound/emm.hpp"

#include <functional>

#include "oscbound/errors.hpp"
#include "oscbound/linalg.hpp"
#include "oscbound/lp.hpp"

namespace oscb {

namespace {

constexpr int kCutCap = 500;

SymMatrix assemble_hankel(const GeneratorTable& t, const std::vector<Real>& u, int sigma_shift, int n) {
    SymMatrix H(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            Real s(0);
            for (int l = 0; l <= t.ms; ++l) s += t.at(i + j + sigma_shift, l) * u[l];
            H.at(i, j) = s;
        }
    return H;
}

// cut coefficients c_l = x^T H^{(sigma,l)} x collapsed through w_s = sum_{i+j=s} x_i x_j
LinearInequality direction_cut(const GeneratorTable& t, const std::vector<Real>& x, int sigma_shift) {
    const int n = static_cast<int>(x.size());
    std::vector<Real> w(2 * n - 1, Real(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i + j] += x[i] * x[j];
    LinearInequality cut;
    cut.a.assign(t.ms + 1, Real(0));
    for (int l = 0; l <= t.ms; ++l) {
        Real c(0);
        for (int s = 0; s < 2 * n - 1; ++s) c += w[s] * t.at(s + sigma_shift, l);
        cut.a[l] = c;
    }
    return cut;
}

Feasibility feasible_direct(const GeneratorTable& t, int pmax) {
    HHConstraintSet hh{&t, pmax};
    std::vector<Real> u = {Real(1)};
    for (int sigma = 0; sigma <= 1; ++sigma) {
        SymMatrix H = assemble_hankel(t, u, sigma, hh.size(sigma));
        if (!cholesky(H).ok) return {Verdict::Infeasible, {}};
    }
    return {Verdict::Feasible, std::move(u)};
}

}  // namespace

Feasibility feasible_at(const Problem& problem, const Real& E, int pmax) {
    // b = 0, E = 2: the n = 0 relation degenerates to 0 = 0 and tau(1) comes
    // free; the exact ground state fills the chain with tau(n) proportional
    // to Gamma((n+3)/2). Every other E is infeasible once tau(1) is forced
    // to zero, which is the exactly-solvable fingerprint.
    if (problem.rep == Representation::Phi && problem.sigma == 3 && problem.b.is_zero() && E == Real(2)) {
        GeneratorTable t;
        t.ms = 0;
        t.pmax = pmax;
        t.m.assign(pmax + 1, Real(0));
        Real g32 = tgamma(Real("1.5"));
        for (int n = 0; n <= pmax; ++n) t.at(n, 0) = tgamma((Real(n) + Real(3)) / Real(2)) / g32;
        return feasible_direct(t, pmax);
    }
    GeneratorTable t = build_generator(problem, E, pmax);
    if (t.ms == 0) return feasible_direct(t, pmax);

    HHConstraintSet hh{&t, pmax};
    const int dim = t.ms + 1;
    SlackProgram prog(dim);
    // coordinate positivity (these also bound the slice, so the LP is compact)
    for (int l = 0; l < dim; ++l) {
        LinearInequality e;
        e.a.assign(dim, Real(0));
        e.a[l] = Real(1);
        prog.add(e);
    }
    // Hankel diagonals
    for (int sigma = 0; sigma <= 1; ++sigma)
        for (int i = 0; i < hh.size(sigma); ++i) {
            LinearInequality d;
            d.a.assign(dim, Real(0));
            for (int l = 0; l < dim; ++l) d.a[l] = t.at(2 * i + sigma, l);
            prog.add(d);
        }

    for (int round = 0; round < kCutCap; ++round) {
        LpResult lp;
        try {
            lp = prog.solve();
        } catch (const PrecisionError&) {
            return {Verdict::Indeterminate, {}};
        }
        if (!lp.feasible) return {Verdict::Infeasible, {}};
        bool all_ok = true;
        for (int sigma = 0; sigma <= 1; ++sigma) {
            SymMatrix H = assemble_hankel(t, lp.u, sigma, hh.size(sigma));
            CholeskyResult ch = cholesky(H);
            if (!ch.ok) {
                prog.add(direction_cut(t, ch.direction, sigma));
                all_ok = false;
            }
        }
        if (all_ok) return {Verdict::Feasible, std::move(lp.u)};
    }
    return {Verdict::Indeterminate, {}};
}

Feasibility feasible_at_hankel_order(const Problem& problem, const Real& E, int N) {
    return feasible_at(problem, E, 2 * N + 1);
}

bool algebraic_ground_check(const Real& E_gr, const Real& b) {
    if (b.sign() < 0) throw InvalidInputError("algebraic_ground_check: b >= 0");
    return Real(0.5) < E_gr && E_gr <= Real(2);
}

// ---------------------------------------------------------------------------
// window cascade

namespace {

// tri-state wrapper: indeterminate widens (counts feasible), degenerate
// energies are evaluated a hair to the side
class FeasFn {
  public:
    FeasFn(const Problem& p, int pmax) : p_(p), pmax_(pmax) {}

    bool widened(const Real& E) const {
        Feasibility f = eval(E);
        return f.verdict != Verdict::Infeasible;
    }
    bool strict(const Real& E) const { return eval(E).verdict == Verdict::Feasible; }

  private:
    Feasibility eval(const Real& E) const {
        try {
            return feasible_at(p_, E, pmax_);
        } catch (const DegenerateEnergyError&) {
            Real nudge = max(abs(E), Real(1)) * Real::eps() * Real(1024);
            return feasible_at(p_, E + nudge, pmax_);
        }
    }
    const Problem& p_;
    int pmax_;
};

struct Window {
    Real lo, hi;      // certified outer endpoints (or scan edges)
    Real anchor;      // a strictly feasible point inside
    bool lo_clamped = false, hi_clamped = false;
};

// anchor search inside [lo, hi]: previous anchor, geometric edge probes
// (the window edge that has already converged is where the next window
// hugs), then refining grids
std::optional<Real> find_anchor(const FeasFn& f, const Real& lo, const Real& hi, const Real& prev_anchor) {
    if (prev_anchor > lo && prev_anchor < hi && f.strict(prev_anchor)) return prev_anchor;
    Real w = hi - lo;
    Real mid = (lo + hi) / Real(2);
    if (f.strict(mid)) return mid;
    Real step = w / Real(4);
    for (int k = 0; k < 96 && step.sign() > 0; ++k) {
        Real a = lo + step, b = hi - step;
        if (f.strict(a)) return a;
        if (a != b && f.strict(b)) return b;
        step /= Real(2);
    }
    int grid = 400;
    for (int pass = 0; pass < 3; ++pass) {
        for (int k = 1; k < grid; ++k) {
            Real e = lo + w * Real(k) / Real(grid);
            if (f.strict(e)) return e;
        }
        grid *= 8;
    }
    return std::nullopt;
}

// bisect both edges of the feasible window around `anchor` within [lo, hi]
Window bisect_edges(const FeasFn& f, const Window& prev, const Real& anchor, const Real& tol_frac, const Real& tol_cap) {
    Window w;
    w.anchor = anchor;
    auto pred = [&](const Real& e) { return f.widened(e); };
    Real tol = max((prev.hi - prev.lo) * tol_frac, Real(0));
    if (tol_cap.sign() > 0) tol = min(tol, tol_cap);
    Real floor_tol = max(abs(anchor), Real(1)) * Real::eps() * Real(65536);
    tol = max(tol, floor_tol);

    if (pred(prev.lo)) {
        // window reaches the bracket edge; report the edge
        w.lo = prev.lo;
        w.lo_clamped = true;
    } else {
        BoundaryResult r = bisect_boundary(pred, Bracket(prev.lo, anchor, tol));
        w.lo = r.lo_side;  // outer: last infeasible below
    }
    if (pred(prev.hi)) {
        w.hi = prev.hi;
        w.hi_clamped = true;
    } else {
        BoundaryResult r = bisect_boundary(pred, Bracket(anchor, prev.hi, tol));
        w.hi = r.hi_side;  // outer: first infeasible above
    }
    return w;
}

Real order_tol_cap(int pmax) {
    // final-order endpoint tolerance 10^(-pmax/2), refined by width later
    return pow10(Real(-pmax) / Real(2));
}

}  // namespace

EnergyInterval ground_bounds(const Problem& problem, int pmax, const Bracket& scan) {
    if (problem.rep == Representation::Psi2) return psi2_state_bounds(problem.b, 0, pmax, scan);
    if (problem.rep == Representation::Weight) throw InvalidInputError("ground_bounds: weight has no spectrum");

    // exactly solvable point: at b = 0 the sigma=3 chain is infeasible for
    // every E != 2 and feasible at E = 2, so the window is the single point
    if (problem.rep == Representation::Phi && problem.sigma == 3 && problem.b.is_zero()) {
        if (feasible_at(problem, Real(2), pmax).verdict != Verdict::Feasible)
            throw EmptyWindowError("ground_bounds: exactly-solvable point failed feasibility");
        EnergyInterval out;
        out.lo = Real(2);
        out.hi = Real(2);
        out.method = Method::EmmPhi;
        out.sigma = 3;
        out.order = pmax;
        out.state = 0;
        out.precision_bits = Real::precision();
        return out;
    }

    const int ms = problem.missing_order();
    int pstart = std::min(pmax, std::max(4, ms + 2));

    Window win;
    win.lo = scan.lo;
    win.hi = scan.hi;
    win.lo_clamped = true;
    win.hi_clamped = true;
    win.anchor = (scan.lo + scan.hi) / Real(2);

    for (int P = pstart; P <= pmax; P = (P == pmax ? pmax + 1 : std::min(P + 1, pmax))) {
        FeasFn f(problem, P);
        std::optional<Real> anchor = find_anchor(f, win.lo, win.hi, win.anchor);
        if (!anchor) throw EmptyWindowError("ground_bounds: no feasible energy at order " + std::to_string(P));
        bool final_order = (P == pmax);
        Window next = bisect_edges(f, win, *anchor, Real(1e-3), final_order ? order_tol_cap(pmax) : Real(0));
        if (final_order) {
            // sharpen endpoints to 1e-3 of the final width
            Window prev = next;
            prev.lo_clamped = next.lo_clamped;
            prev.hi_clamped = next.hi_clamped;
            next = bisect_edges(f, prev, *anchor, Real(1e-3), Real(0));
        }
        // inflate before the next order so the nested window stays inside
        Real grow = (next.hi - next.lo) / Real(8);
        Window inflated = next;
        if (!next.lo_clamped) inflated.lo = max(scan.lo, next.lo - grow);
        if (!next.hi_clamped) inflated.hi = min(scan.hi, next.hi + grow);
        win = inflated;
        win.anchor = *anchor;
        if (final_order) {
            EnergyInterval out;
            out.lo = next.lo;
            out.hi = next.hi;
            out.method = problem.rep == Representation::Psi ? Method::EmmPsi
                         : problem.rep == Representation::PsiChain ? Method::EmmPsiChain
                                                                   : Method::EmmPhi;
            out.sigma = problem.sigma;
            out.order = pmax;
            out.state = 0;
            out.precision_bits = Real::precision();
            return out;
        }
    }
    throw EmptyWindowError("ground_bounds: empty order range");
}

EnergyInterval psi2_state_bounds(const Real& b, int state, int pmax, const Bracket& scan) {
    if (state < 0) throw InvalidInputError("psi2_state_bounds: state >= 0");
    Problem problem(b, Representation::Psi2);

    // find the first order at which islands 0..state separate
    int P = std::min(pmax, 12);
    const int grid_n = 1600;
    std::vector<std::pair<Real, Real>> islands;
    Real island_anchor;
    for (;; P = std::min(P + 2, pmax)) {
        FeasFn f(problem, P);
        islands.clear();
        bool in_island = false;
        Real start;
        Real prev;
        for (int k = 0; k <= grid_n; ++k) {
            Real e = scan.lo + (scan.hi - scan.lo) * Real(k) / Real(grid_n);
            bool feas = f.strict(e);
            if (feas && !in_island) {
                start = e;
                in_island = true;
            }
            if (!feas && in_island) {
                islands.emplace_back(start, prev);
                in_island = false;
            }
            prev = e;
        }
        if (in_island) islands.emplace_back(start, scan.hi);
        if (static_cast<int>(islands.size()) > state) break;
        if (P >= pmax)
            throw ResolutionError("psi2_state_bounds: islands unresolved at order " + std::to_string(pmax) +
                                  " (found " + std::to_string(islands.size()) + ")");
    }
    island_anchor = (islands[state].first + islands[state].second) / Real(2);

    // track the chosen island up the order cascade (nesting keeps identity)
    Window win;
    {
        Real w = islands[state].second - islands[state].first;
        Real pad = max(w, (scan.hi - scan.lo) / Real(grid_n)) ;
        win.lo = max(scan.lo, islands[state].first - pad);
        win.hi = min(scan.hi, islands[state].second + pad);
        win.anchor = island_anchor;
        win.lo_clamped = false;
        win.hi_clamped = false;
    }
    for (;; P = std::min(P + 1, pmax)) {
        FeasFn f(problem, P);
        std::optional<Real> anchor = find_anchor(f, win.lo, win.hi, win.anchor);
        if (!anchor)
            throw EmptyWindowError("psi2_state_bounds: island lost at order " + std::to_string(P));
        bool final_order = (P == pmax);
        Window next = bisect_edges(f, win, *anchor, Real(1e-3), final_order ? order_tol_cap(pmax) : Real(0));
        if (final_order) {
            Window prev = next;
            next = bisect_edges(f, prev, *anchor, Real(1e-3), Real(0));
            EnergyInterval out;
            out.lo = next.lo;
            out.hi = next.hi;
            out.method = Method::EmmPsi2;
            out.order = pmax;
            out.state = state;
            out.precision_bits = Real::precision();
            return out;
        }
        Real grow = (next.hi - next.lo) / Real(8);
        win = next;
        win.lo = max(scan.lo, next.lo - grow);
        win.hi = min(scan.hi, next.hi + grow);
        win.anchor = *anchor;
    }
}

}  // namespace oscb
