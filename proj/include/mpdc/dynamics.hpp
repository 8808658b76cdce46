#ifndef MPDC_DYNAMICS_HPP
#define MPDC_DYNAMICS_HPP

#include <complex>
#include <Eigen/Dense>

#include "mpdc/model.hpp"

namespace mpdc {

// Bogoliubov propagator acting on the operator vector
// (a_1 .. a_n, b+_{n+1} .. b+_{2n}) in the slot basis of
// FrequencyGrid::slot_frequency.  Row k <= n: a_k(tau) = sum_j r_{kj} Y_j(0);
// rows above n propagate the idler creators.
struct Propagator {
    Eigen::MatrixXcd r; // 2n x 2n
    double tau = 0.0;
    int n = 1;
};

// Closed-form propagator for the pairwise pattern: each (signal k, idler -k)
// pair evolves independently,
//   a_k(tau)    = e^{-i w1k tau} (cosh tau a_k(0) + e^{-i phi} sinh tau b+_{-k}(0)),
//   b+_{-k}(tau) = e^{+i w2,-k tau} (e^{i phi} sinh tau a_k(0) + cosh tau b+_{-k}(0)).
Propagator pairwise_propagator(const FrequencyGrid& grid, const ModelConfig& cfg, double tau);

// Rotating-frame generator for the one-to-all pattern:
//   M = [[A, B], [B+, A]],
// A_ii = i * delta * (m - (i-1)) purely imaginary detunings (identical ladder
// for both blocks under the slot convention), B_ij = e^{-i phi} (units of w).
// Rejects the pairwise pattern, which has a closed form.
Eigen::MatrixXcd build_M(const FrequencyGrid& grid, const ModelConfig& cfg);

// exp(M * tau) by scaling-and-squaring with a Pade approximant.
Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& M, double tau);

// R(tau) = F^{-1}(tau) exp(M tau) with F_ii = e^{+i w1_bar tau} on the signal
// block and e^{-i w2_bar tau} on the idler block.
Propagator one_to_all_propagator(const FrequencyGrid& grid, const ModelConfig& cfg, double tau);

// Dispatch on cfg.pattern.
Propagator propagator_for(const ModelConfig& cfg, const FrequencyGrid& grid, double tau);

// Coefficients of the collective modes A = (1/sqrt n) sum_k a_k and
// B+ = (1/sqrt n) sum_l b+_l over the initial micro operators:
//   A(tau)  = sum_{j<=n} m_j a_j(0)  + sum_{j>n} n_j b+_j(0),
//   B+(tau) = sum_{j<=n} t_j a_j(0)  + sum_{j>n} u_j b+_j(0).
struct CollectiveCoefficients {
    Eigen::VectorXcd m, n_, t, u;

    double sum_m2() const { return m.squaredNorm(); }
    double sum_n2() const { return n_.squaredNorm(); }
    double sum_t2() const { return t.squaredNorm(); }
    double sum_u2() const { return u.squaredNorm(); }
};

CollectiveCoefficients collective_coefficients(const Propagator& p);

// Largest deviation of the row sums sum_{j<=n}|r_kj|^2 - sum_{j>n}|r_kj|^2
// from +1 (signal rows) / -1 (idler rows), scaled by max(1, row magnitude).
double bogoliubov_defect(const Propagator& p);

} // namespace mpdc

#endif
