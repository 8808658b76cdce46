#ifndef MPDC_GAUSSIAN_HPP
#define MPDC_GAUSSIAN_HPP

#include <Eigen/Dense>

#include "mpdc/dynamics.hpp"
#include "mpdc/model.hpp"

namespace mpdc {

// Bose-Einstein occupation 1/(e^{omega/theta} - 1); exactly 0 for theta = 0.
double thermal_occupation(double omega_bar, double theta);

// Initial thermal occupations per micro-mode plus their collective averages
// N_j0 = (1/n) sum_k nbar_jk.
struct ThermalState {
    std::vector<double> nbar1; // grid order (ascending frequency)
    std::vector<double> nbar2;
    double N10 = 0.0;
    double N20 = 0.0;

    int n() const { return static_cast<int>(nbar1.size()); }
    // Occupation of propagator slot j (idler slots descend in frequency).
    double occupation_for_slot(int j) const;
};

ThermalState make_thermal_state(const FrequencyGrid& grid, double theta);

// 4x4 covariance matrix of the collective quadratures (Q1, P1, Q2, P2),
// vacuum variance 1/2.
struct CollectiveCM {
    Eigen::Matrix4d sigma = Eigen::Matrix4d::Zero();

    Eigen::Matrix2d alpha() const { return sigma.block<2, 2>(0, 0); }
    Eigen::Matrix2d beta() const { return sigma.block<2, 2>(2, 2); }
    Eigen::Matrix2d gamma() const { return sigma.block<2, 2>(0, 2); }
    double det_gamma() const { return gamma().determinant(); }
};

// Assembles the structured CM from the two collective photon numbers and the
// complex cross-correlation C = Sigma13 + i Sigma14; the symmetry relations
// Sigma12 = Sigma34 = 0, Sigma24 = -Sigma13, Sigma23 = Sigma14 hold exactly.
CollectiveCM cm_from_moments(double n1, double n2, std::complex<double> c);

// Closed form for the pairwise pattern:
//   <N1> = N10 cosh^2 tau + (N20 + 1) sinh^2 tau,
//   <N2> = N20 cosh^2 tau + (N10 + 1) sinh^2 tau,
//   C    = (1/2) sinh(2 tau) e^{-i (omega0_bar tau + phi)} (N10 + N20 + 1).
CollectiveCM cm_pairwise(const ThermalState& state, const ModelConfig& cfg, double tau);

// General assembly from collective coefficients (any pattern):
//   <N1> = sum_{j<=n} nbar_j |m_j|^2 + sum_{j>n} (nbar_j + 1) |n_j|^2,
//   <N2> = sum_{j<=n} (nbar_j + 1) |t_j|^2 + sum_{j>n} nbar_j |u_j|^2,
//   C    = sum_{j<=n} (nbar_j + 1/2) m_j t_j^* + sum_{j>n} (nbar_j + 1/2) n_j u_j^*.
CollectiveCM cm_from_coefficients(const ThermalState& state, const CollectiveCoefficients& coeffs);

// cm_from_coefficients with a dimension check against the state.
CollectiveCM cm_one_to_all(const ThermalState& state, const CollectiveCoefficients& coeffs, double tau);

// Pattern dispatch: pairwise closed form, or propagator + coefficient assembly.
CollectiveCM collective_cm(const ModelConfig& cfg, const FrequencyGrid& grid,
                           const ThermalState& state, double tau);

struct Invariants {
    double I1 = 0.0; // det Sigma
    double I2 = 0.0; // det alpha + det beta + 2 det gamma
};

Invariants invariants(const CollectiveCM& cm);

struct SCriterion {
    double S = 0.0;
    double S0 = 0.0; // N10 N20 (N10 + 1)(N20 + 1)
    bool entangled = false;
};

// S = S0 + (det gamma - |det gamma|)/2; entangled iff S < 0.
SCriterion s_criterion(const CollectiveCM& cm, const ThermalState& state);

// Smaller symplectic eigenvalue of the partially transposed CM,
// nu~^2 = 2 det Sigma / (D + sqrt(D^2 - 4 det Sigma)), D = det a + det b - 2 det g.
double nu_tilde(const CollectiveCM& cm);

// E_N = max(0, -log_base(2 nu~)).
double log_negativity(const CollectiveCM& cm, LogBase base);

// Smaller symplectic eigenvalue of the CM itself (>= 1/2 for a physical state).
double min_symplectic_eigenvalue(const CollectiveCM& cm);

} // namespace mpdc

#endif
