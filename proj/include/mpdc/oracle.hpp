#ifndef MPDC_ORACLE_HPP
#define MPDC_ORACLE_HPP

#include <Eigen/Dense>

#include "mpdc/dynamics.hpp"
#include "mpdc/gaussian.hpp"
#include "mpdc/model.hpp"

namespace mpdc {
namespace oracle {

// Fixed-step classical RK4 for the matrix ODE dG/dtau = M G, G(0) = I.
// Deliberately plain: dense products only, no reuse of the closed forms.
Eigen::MatrixXcd integrate_Z(const Eigen::MatrixXcd& M, double tau_f, int steps);

// Rotating-frame generator assembled from the interaction graph's edges
// (works for both patterns; requires equal detuning ladders).
Eigen::MatrixXcd rotating_frame_generator(const ModelConfig& cfg, const FrequencyGrid& grid);

// Propagator via RK4 instead of the matrix exponential / closed form.
Propagator rk4_propagator(const ModelConfig& cfg, const FrequencyGrid& grid, double tau,
                          int steps_per_unit_tau = 10000);

// Real symplectic transformation on the 4n interleaved micro quadratures
// (q_1, p_1, ..., q_2n, p_2n) induced by the Bogoliubov propagator.
Eigen::MatrixXd symplectic_from_propagator(const Propagator& p);

// Diagonal micro covariance matrix of the initial thermal state.
Eigen::MatrixXd initial_micro_cm(const ThermalState& state);

// Projector onto the collective quadratures (uniform 1/sqrt(n) weights).
Eigen::MatrixXd collective_projector(int n);

// Full micro-mode covariance evolution Sigma -> S Sigma S^T followed by the
// collective projection; bypasses the coefficient-sum assembly entirely.
CollectiveCM micro_cm_evolve_and_project(const ModelConfig& cfg, const ThermalState& state, double tau);

// Same, for a caller-supplied propagator (e.g. the RK4 one).
CollectiveCM micro_cm_project(const Propagator& p, const ThermalState& state);

} // namespace oracle
} // namespace mpdc

#endif
