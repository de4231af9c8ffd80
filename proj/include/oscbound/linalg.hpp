#ifndef OSCBOUND_LINALG_HPP
#define OSCBOUND_LINALG_HPP

#include <vector>

#include "oscbound/real.hpp"

namespace oscb {

// Symmetric matrix, lower triangle stored once.
class SymMatrix {
  public:
    explicit SymMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * (dim + 1) / 2) {}

    int dim() const { return dim_; }

    Real& at(int i, int j) { return a_[idx(i, j)]; }
    const Real& at(int i, int j) const { return a_[idx(i, j)]; }

  private:
    static size_t idx_ordered(int i, int j) { return static_cast<size_t>(i) * (i + 1) / 2 + j; }
    size_t idx(int i, int j) const { return i >= j ? idx_ordered(i, j) : idx_ordered(j, i); }

    int dim_;
    std::vector<Real> a_;
};

// Lower-triangular factor, same packed layout as SymMatrix.
struct LowerTriangular {
    int dim = 0;
    std::vector<Real> a;  // row-major packed lower triangle

    Real& at(int i, int j) { return a[static_cast<size_t>(i) * (i + 1) / 2 + j]; }
    const Real& at(int i, int j) const { return a[static_cast<size_t>(i) * (i + 1) / 2 + j]; }
};

// On failure `direction` is a unit vector x with x^T A x <= 0, built from the
// failed pivot column; `fail_index` is that column.
struct CholeskyResult {
    bool ok = false;
    LowerTriangular lower;
    std::vector<Real> direction;
    int fail_index = -1;
};

CholeskyResult cholesky(const SymMatrix& A);

struct EigenPair {
    Real value;
    std::vector<Real> vector;  // unit 2-norm
};

// Smallest eigenvalue and eigenvector of a symmetric matrix, dim <= 8.
// Spectrum slicing (LDL^T inertia counts seeded by Gershgorin bounds) plus
// inverse iteration; certified to ~half the working digits.
EigenPair smallest_eigenpair(const SymMatrix& A);

// Number of eigenvalues of A strictly below t (Sylvester inertia of A - tI).
int eigenvalues_below(const SymMatrix& A, const Real& t);

// Dense solve of (n x n) system with partial pivoting; A row-major, in-place
// scratch copies. Used by inverse iteration and small test oracles.
std::vector<Real> solve_dense(std::vector<std::vector<Real>> A, std::vector<Real> rhs);

}  // namespace oscb

#endif
