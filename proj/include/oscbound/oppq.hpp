#ifndef OSCBOUND_OPPQ_HPP
#define OSCBOUND_OPPQ_HPP

#include <utility>
#include <vector>

#include "oscbound/emm.hpp"
#include "oscbound/mer.hpp"
#include "oscbound/solve1d.hpp"

namespace oscb {

// Polynomials orthonormal against R(χ) = χ^{-1/2} e^{-(χ-b)²/2}. Xi holds the
// monomial coefficients (rows of the inverse Cholesky factor of [ω(i+j)]);
// alpha/gamma are the three-term recurrence coefficients the rows are built
// from, kept for stable pointwise evaluation.
struct OrthoBasis {
    int N = 0;  // number of polynomials, degrees 0..N-1
    Real b;
    std::vector<Real> alpha;                // alpha_0..alpha_{N-1}
    std::vector<Real> gamma;                // gamma_0(=0), gamma_1..gamma_{N-1}
    std::vector<std::vector<Real>> xi;      // xi[n][j], j <= n
    WeightMoments weight;                   // omega(0..2N)

    // P_0(chi)..P_{N-1}(chi) by the recurrence
    std::vector<Real> eval(const Real& chi) const;
};

OrthoBasis build_basis(const WeightMoments& weight, int N);

// OPPQ projection coefficients Lambda_l^{(n)}(E) for n = 0..nmax.
struct LambdaTable {
    Real E;
    int ms = 3;
    std::vector<std::vector<Real>> rows;  // rows[n][l]
};

LambdaTable lambda_table(const Problem& problem, const Real& E, const OrthoBasis& basis, int nmax);

// Det(Lambda_{l2}^{(N-l1)}(E)), the AM quantization function.
Real am_determinant(const Problem& problem, const Real& E, const OrthoBasis& basis, int N);

// Roots of the AM determinant in `scan`, ascending (sign scan + bisection).
std::vector<Real> am_energies(const Problem& problem, int N, const OrthoBasis& basis, const Bracket& scan,
                              int grid_points = 800);

// Smallest eigenvalue of P^{(N)}(E) = sum of Lambda dyads; throws
// PrecisionError when the value is below the working-precision noise floor.
Real bm_lambda(const Problem& problem, const Real& E, int N, const OrthoBasis& basis);

struct Eigencurve {
    int N = 0;
    std::vector<std::pair<Real, Real>> samples;  // (E, lambda_N(E))
    struct Minimum {
        Real E;
        Real lambda;
        int state;  // index among the curve's minima, ascending E
    };
    std::vector<Minimum> minima;
};

Eigencurve bm_curve(const Problem& problem, int N, const OrthoBasis& basis, const std::vector<Real>& grid,
                    const Real& refine_tol = Real(1e-13));

// Bounds from lambda_N(E) = B_U on both flanks of the state's minimum;
// `window` must isolate that single minimum.
EnergyInterval bm_bounds(const Problem& problem, int state, int N, const OrthoBasis& basis, const Real& B_U,
                         const Bracket& window);

struct ReconstructedState {
    Real E;
    std::vector<Real> u;       // normalized missing moments (sum = 1)
    std::vector<Real> coeffs;  // c_0..c_{cap-1}
    std::vector<Real> grid;
    std::vector<Real> values;  // Psi(chi) = chi^2 * sum c_n P_n(chi) R(chi), L2-normalized
};

ReconstructedState reconstruct(const Problem& problem, const Real& E, int N, const OrthoBasis& basis,
                               const std::vector<Real>& grid, int coeff_cap = 40);

// E_n(b) for each b (rows) and n = 0..n_max (columns), from OPPQ-AM.
std::vector<std::vector<Real>> sweep_energies(const std::vector<Real>& b_list, int n_max, int N);

}  // namespace oscb

#endif
