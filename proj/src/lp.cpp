#include "oscbound/lp.hpp"

#include "oscbound/errors.hpp"

namespace oscb {

namespace {

// m x m inverse by Gauss-Jordan with partial pivoting; returns false if singular
bool invert(std::vector<std::vector<Real>> A, std::vector<std::vector<Real>>& inv) {
    const int m = static_cast<int>(A.size());
    inv.assign(m, std::vector<Real>(m, Real(0)));
    for (int i = 0; i < m; ++i) inv[i][i] = Real(1);
    for (int c = 0; c < m; ++c) {
        int piv = c;
        for (int r = c + 1; r < m; ++r)
            if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
        if (A[piv][c].is_zero()) return false;
        std::swap(A[c], A[piv]);
        std::swap(inv[c], inv[piv]);
        Real f = A[c][c];
        for (int k = 0; k < m; ++k) {
            A[c][k] /= f;
            inv[c][k] /= f;
        }
        for (int r = 0; r < m; ++r) {
            if (r == c || A[r][c].is_zero()) continue;
            Real g = A[r][c];
            for (int k = 0; k < m; ++k) {
                A[r][k] -= g * A[c][k];
                inv[r][k] -= g * inv[c][k];
            }
        }
    }
    return true;
}

struct SimplexState {
    std::vector<int> basis;
    std::vector<std::vector<Real>> binv;  // inverse of basis matrix
    std::vector<Real> yb;                 // basic values
};

// Minimize cost over columns (equality-form dual); Bland's rule.
// Returns false if the iteration cap is hit.
bool run_simplex(const std::vector<std::vector<Real>>& cols, const std::vector<Real>& cost,
                 const std::vector<Real>& rhs, int first_allowed, int n_allowed, SimplexState& st) {
    const int m = static_cast<int>(rhs.size());
    const long cap = 400 + 20L * n_allowed;
    for (long iter = 0; iter < cap; ++iter) {
        // multipliers pi = cost_B * Binv
        std::vector<Real> pi(m, Real(0));
        for (int i = 0; i < m; ++i)
            for (int r = 0; r < m; ++r) pi[i] += cost[st.basis[r]] * st.binv[r][i];
        // Bland: first allowed column whose reduced cost is negative beyond
        // the roundoff scale of its own computation
        const Real thresh_unit = Real::eps() * Real(1L << 32);
        int enter = -1;
        for (int k = first_allowed; k < first_allowed + n_allowed; ++k) {
            Real rc = cost[k];
            Real scale = abs(cost[k]);
            for (int i = 0; i < m; ++i) {
                Real term = pi[i] * cols[k][i];
                rc -= term;
                scale += abs(term);
            }
            if (rc < -scale * thresh_unit) {
                enter = k;
                break;
            }
        }
        if (enter < 0) return true;  // optimal
        std::vector<Real> w(m, Real(0));
        for (int r = 0; r < m; ++r)
            for (int i = 0; i < m; ++i) w[r] += st.binv[r][i] * cols[enter][i];
        int leave = -1;
        Real best;
        for (int r = 0; r < m; ++r) {
            if (w[r].sign() <= 0) continue;
            Real ratio = st.yb[r] / w[r];
            if (leave < 0 || ratio < best || (ratio == best && st.basis[r] < st.basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) throw PrecisionError("lp: dual unbounded (primal infeasible by construction)");
        // pivot: update basis and refactor (m <= 4, refactor is cheap)
        st.basis[leave] = enter;
        std::vector<std::vector<Real>> B(m, std::vector<Real>(m, Real(0)));
        for (int r = 0; r < m; ++r)
            for (int i = 0; i < m; ++i) B[i][r] = cols[st.basis[r]][i];
        if (!invert(B, st.binv)) throw PrecisionError("lp: singular basis after pivot");
        st.yb.assign(m, Real(0));
        for (int r = 0; r < m; ++r)
            for (int i = 0; i < m; ++i) st.yb[r] += st.binv[r][i] * rhs[i];
    }
    return false;
}

}  // namespace

SlackProgram::SlackProgram(int dim) : m_(dim) {
    if (dim < 1 || dim > 4) throw InvalidInputError("SlackProgram: dim must be 1..4");
}

void SlackProgram::add(const LinearInequality& cut) {
    if (static_cast<int>(cut.a.size()) != m_) throw InvalidInputError("SlackProgram: cut dimension mismatch");
    Real s(0);
    for (const Real& v : cut.a) {
        if (!v.is_finite()) throw InvalidInputError("SlackProgram: non-finite cut");
        s += v * v;
    }
    s = sqrt(s);
    if (s.is_zero()) throw InvalidInputError("SlackProgram: zero cut");
    // dual column for cut a: rows 0..m-2 carry -(a_i - a_last), last row |a|
    std::vector<Real> col(m_, Real(0));
    const Real& alast = cut.a[m_ - 1];
    for (int i = 0; i + 1 < m_; ++i) col[i] = alast - cut.a[i];
    col[m_ - 1] = s;
    cols_.push_back(std::move(col));
    cost_.push_back(alast);
}

LpResult SlackProgram::solve() {
    const int m = m_;
    const int K = size();
    if (K == 0) throw InvalidInputError("SlackProgram: no cuts");
    std::vector<Real> rhs(m, Real(0));
    rhs[m - 1] = Real(1);

    SimplexState st;
    bool warm = false;
    if (static_cast<int>(basis_.size()) == m) {
        // try to reuse the previous basis
        std::vector<std::vector<Real>> B(m, std::vector<Real>(m, Real(0)));
        for (int r = 0; r < m; ++r)
            for (int i = 0; i < m; ++i) B[i][r] = cols_[basis_[r]][i];
        if (invert(B, st.binv)) {
            st.basis = basis_;
            st.yb.assign(m, Real(0));
            bool ok = true;
            for (int r = 0; r < m; ++r) {
                for (int i = 0; i < m; ++i) st.yb[r] += st.binv[r][i] * rhs[i];
            }
            for (int r = 0; r < m; ++r)
                if (st.yb[r].sign() < 0) ok = false;
            warm = ok;
        }
    }

    std::vector<std::vector<Real>> cols = cols_;
    std::vector<Real> cost = cost_;
    if (!warm) {
        // phase 1 with artificial identity columns
        std::vector<Real> p1cost(K, Real(0));
        for (int i = 0; i < m; ++i) {
            std::vector<Real> art(m, Real(0));
            art[i] = Real(1);
            cols.push_back(std::move(art));
            p1cost.push_back(Real(1));
        }
        st.basis.resize(m);
        st.binv.assign(m, std::vector<Real>(m, Real(0)));
        st.yb = rhs;
        for (int i = 0; i < m; ++i) {
            st.basis[i] = K + i;
            st.binv[i][i] = Real(1);
        }
        if (!run_simplex(cols, p1cost, rhs, 0, K + m, st))
            throw PrecisionError("lp: phase-1 iteration cap");
        Real infeas(0), yscale(0);
        for (int r = 0; r < m; ++r) {
            yscale = max(yscale, abs(st.yb[r]));
            if (st.basis[r] >= K) infeas += st.yb[r];
        }
        if (infeas > max(yscale, Real(1)) * Real::eps() * Real(1L << 32))
            throw PrecisionError("lp: phase-1 left infeasible");
        // kick remaining (degenerate) artificials out where possible
        for (int r = 0; r < m; ++r) {
            if (st.basis[r] < K) continue;
            for (int k = 0; k < K; ++k) {
                Real w(0);
                for (int i = 0; i < m; ++i) w += st.binv[r][i] * cols[k][i];
                bool in_basis = false;
                for (int q = 0; q < m; ++q) in_basis = in_basis || st.basis[q] == k;
                if (!w.is_zero() && !in_basis) {
                    st.basis[r] = k;
                    std::vector<std::vector<Real>> B(m, std::vector<Real>(m, Real(0)));
                    for (int q = 0; q < m; ++q)
                        for (int i = 0; i < m; ++i) B[i][q] = cols[st.basis[q]][i];
                    if (!invert(B, st.binv)) throw PrecisionError("lp: singular basis in cleanup");
                    st.yb.assign(m, Real(0));
                    for (int q = 0; q < m; ++q)
                        for (int i = 0; i < m; ++i) st.yb[q] += st.binv[q][i] * rhs[i];
                    break;
                }
            }
            if (st.basis[r] >= K)
                throw PrecisionError("lp: artificial stuck in basis");
        }
        cols.resize(K);
    }

    if (!run_simplex(cols, cost, rhs, 0, K, st)) throw PrecisionError("lp: phase-2 iteration cap");
    basis_ = st.basis;

    // primal point = simplex multipliers of the optimal dual basis
    std::vector<Real> pi(m, Real(0));
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < m; ++r) pi[i] += cost[st.basis[r]] * st.binv[r][i];

    LpResult out;
    out.u.assign(m, Real(0));
    Real zsum(0);
    for (int i = 0; i + 1 < m; ++i) {
        out.u[i] = pi[i];
        zsum += pi[i];
    }
    out.u[m - 1] = Real(1) - zsum;
    out.min_slack = pi[m - 1];
    out.feasible = out.min_slack.sign() > 0;
    return out;
}

LpResult lp_interior(const std::vector<LinearInequality>& ineqs, int dim) {
    SlackProgram prog(dim);
    for (const auto& q : ineqs) prog.add(q);
    return prog.solve();
}

}  // namespace oscb
