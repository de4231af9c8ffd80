#include "oscbound/linalg.hpp"

#include "oscbound/errors.hpp"

namespace oscb {

CholeskyResult cholesky(const SymMatrix& A) {
    const int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (!A.at(i, j).is_finite()) throw InvalidInputError("cholesky: non-finite entry");

    CholeskyResult res;
    res.lower.dim = n;
    res.lower.a.assign(static_cast<size_t>(n) * (n + 1) / 2, Real(0));
    LowerTriangular& L = res.lower;

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Real s = A.at(i, j);
            for (int k = 0; k < j; ++k) s -= L.at(i, k) * L.at(j, k);
            if (i == j) {
                if (s.sign() <= 0) {
                    // x = (w, 1, 0...) with L_{i-1}^T w = -l_i gives x^T A x = s <= 0
                    std::vector<Real> x(n, Real(0));
                    x[i] = Real(1);
                    for (int r = i - 1; r >= 0; --r) {
                        Real acc(0);
                        for (int k = r + 1; k <= i; ++k) acc += L.at(k, r) * x[k];
                        x[r] = -acc / L.at(r, r);
                    }
                    Real nrm(0);
                    for (const Real& v : x) nrm += v * v;
                    nrm = sqrt(nrm);
                    for (Real& v : x) v /= nrm;
                    res.ok = false;
                    res.direction = std::move(x);
                    res.fail_index = i;
                    return res;
                }
                L.at(i, i) = sqrt(s);
            } else {
                L.at(i, j) = s / L.at(j, j);
            }
        }
    }
    res.ok = true;
    return res;
}

namespace {

// LDL^T pivots of A - tI without pivoting; returns count of negative pivots,
// or -1 if a pivot vanished (caller nudges t).
int negative_pivots(const SymMatrix& A, const Real& t) {
    const int n = A.dim();
    std::vector<std::vector<Real>> L(n, std::vector<Real>(n, Real(0)));
    std::vector<Real> d(n, Real(0));
    int neg = 0;
    for (int j = 0; j < n; ++j) {
        Real dj = A.at(j, j) - t;
        for (int k = 0; k < j; ++k) dj -= L[j][k] * L[j][k] * d[k];
        if (dj.is_zero()) return -1;
        if (dj.sign() < 0) ++neg;
        d[j] = dj;
        for (int i = j + 1; i < n; ++i) {
            Real s = A.at(i, j);
            for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k] * d[k];
            L[i][j] = s / dj;
        }
    }
    return neg;
}

}  // namespace

int eigenvalues_below(const SymMatrix& A, const Real& t) {
    Real shift = t;
    Real scale = max(abs(t), Real(1));
    Real nudge = scale * Real::eps();
    for (int attempt = 0; attempt < 64; ++attempt) {
        int c = negative_pivots(A, shift);
        if (c >= 0) return c;
        shift += nudge;
        nudge *= Real(2);
    }
    throw PrecisionError("eigenvalues_below: persistent zero pivot");
}

std::vector<Real> solve_dense(std::vector<std::vector<Real>> A, std::vector<Real> rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
        std::swap(A[c], A[piv]);
        std::swap(rhs[c], rhs[piv]);
        if (A[c][c].is_zero()) throw PrecisionError("solve_dense: singular matrix");
        for (int r = c + 1; r < n; ++r) {
            Real f = A[r][c] / A[c][c];
            if (f.is_zero()) continue;
            for (int k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    std::vector<Real> x(n, Real(0));
    for (int r = n - 1; r >= 0; --r) {
        Real s = rhs[r];
        for (int k = r + 1; k < n; ++k) s -= A[r][k] * x[k];
        x[r] = s / A[r][r];
    }
    return x;
}

EigenPair smallest_eigenpair(const SymMatrix& A0) {
    const int n = A0.dim();
    if (n < 1 || n > 8) throw InvalidInputError("smallest_eigenpair: dim must be in [1,8]");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (!A0.at(i, j).is_finite()) throw InvalidInputError("smallest_eigenpair: non-finite entry");

    // scale by a power of two so bisection tolerances are relative
    Real amax(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) amax = max(amax, abs(A0.at(i, j)));
    long e2 = amax.is_zero() ? 0 : mpfr_get_exp(amax.raw());
    SymMatrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            A.at(i, j) = A0.at(i, j);
            mpfr_mul_2si(A.at(i, j).raw(), A.at(i, j).raw(), -e2, MPFR_RNDN);
        }

    // Gershgorin bracket
    Real lo, hi;
    for (int i = 0; i < n; ++i) {
        Real r(0);
        for (int j = 0; j < n; ++j)
            if (j != i) r += abs(A.at(i, j));
        Real l = A.at(i, i) - r, h = A.at(i, i) + r;
        if (i == 0 || l < lo) lo = l;
        if (i == 0 || h > hi) hi = h;
    }

    Real tol = max(abs(lo), abs(hi)) * Real::eps();
    // stop once the bracket is tighter than ~3/4 of the working digits
    for (long it = 0; it < 3 * Real::internal_bits() / 4; ++it) {
        Real mid = (lo + hi) / Real(2);
        if (eigenvalues_below(A, mid) >= 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= tol) break;
    }
    Real lambda = (lo + hi) / Real(2);

    // inverse iteration at a slightly interior shift
    Real shift = lambda + max(abs(lambda), Real(1)) * Real::eps() * Real(16);
    std::vector<Real> x(n, Real(0));
    for (int i = 0; i < n; ++i) x[i] = Real(1 + i % 3);
    for (int iter = 0; iter < 4; ++iter) {
        std::vector<std::vector<Real>> M(n, std::vector<Real>(n, Real(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M[i][j] = A.at(i, j);
        for (int i = 0; i < n; ++i) M[i][i] -= shift;
        std::vector<Real> y;
        try {
            y = solve_dense(std::move(M), x);
        } catch (const PrecisionError&) {
            shift += max(abs(lambda), Real(1)) * Real::eps() * Real(64);
            continue;
        }
        Real nrm(0);
        for (const Real& v : y) nrm += v * v;
        nrm = sqrt(nrm);
        for (Real& v : y) v /= nrm;
        x = std::move(y);
    }
    // Rayleigh quotient at the converged vector
    Real rq(0);
    for (int i = 0; i < n; ++i) {
        Real row(0);
        for (int j = 0; j < n; ++j) row += A.at(i, j) * x[j];
        rq += x[i] * row;
    }
    EigenPair out;
    out.value = rq;
    mpfr_mul_2si(out.value.raw(), out.value.raw(), e2, MPFR_RNDN);
    out.vector = std::move(x);
    return out;
}

}  // namespace oscb
