#include "mpdc/oracle.hpp"

#include <cmath>
#include <complex>

namespace mpdc {
namespace oracle {

using std::complex;

Eigen::MatrixXcd integrate_Z(const Eigen::MatrixXcd& M, double tau_f, int steps) {
    if (steps <= 0) throw std::invalid_argument("integrate_Z: steps must be positive");
    const auto dim = M.rows();
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Identity(dim, dim);
    if (tau_f == 0.0) return G;
    const double h = tau_f / steps;
    Eigen::MatrixXcd k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim);
    for (int s = 0; s < steps; ++s) {
        k1 = M * G;
        k2 = M * (G + (0.5 * h) * k1);
        k3 = M * (G + (0.5 * h) * k2);
        k4 = M * (G + h * k3);
        G += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return G;
}

Eigen::MatrixXcd rotating_frame_generator(const ModelConfig& cfg, const FrequencyGrid& grid) {
    const int n = grid.n();
    const complex<double> kI{0.0, 1.0};
    const complex<double> b = std::exp(-kI * cfg.pump_phase);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    // Diagonal: rotating-frame detunings of each slot.
    for (int j = 0; j < 2 * n; ++j) {
        const double centre = j < n ? cfg.omega1_bar : cfg.omega2_bar;
        const double det = grid.slot_frequency(j) - centre;
        // Signal slots rotate as e^{-i det tau}, idler creator slots as e^{+i det tau};
        // the idler slot ordering makes both signs come out as -i * det * (slot k).
        M(j, j) = (j < n ? -kI : kI) * det;
    }
    // Couplings from the graph's edge list.
    const InteractionGraph g = build_graph(cfg);
    for (const auto& [vs, vi] : g.edges) {
        const int row = vs.k + grid.m;              // signal slot, ascending k
        const int col = n + (grid.m - vi.k);        // idler slot, descending k
        M(row, col) = b;
        M(col, row) = std::conj(b);
    }
    return M;
}

Propagator rk4_propagator(const ModelConfig& cfg, const FrequencyGrid& grid, double tau,
                          int steps_per_unit_tau) {
    const int n = grid.n();
    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(tau) * steps_per_unit_tau)));
    Propagator p;
    p.tau = tau;
    p.n = n;
    p.r = integrate_Z(rotating_frame_generator(cfg, grid), tau, steps);
    const complex<double> kI{0.0, 1.0};
    p.r.topRows(n) *= std::exp(-kI * (cfg.omega1_bar * tau));
    p.r.bottomRows(n) *= std::exp(kI * (cfg.omega2_bar * tau));
    return p;
}

Eigen::MatrixXd symplectic_from_propagator(const Propagator& p) {
    const int n = p.n;
    const int n2 = 2 * n;
    Eigen::MatrixXd S(2 * n2, 2 * n2);
    for (int i = 0; i < n2; ++i) {
        for (int j = 0; j < n2; ++j) {
            // c_i(tau) = sum_j alpha_ij c_j(0) + beta_ij c+_j(0), where rows
            // above n of r propagate creators: b_i(tau) = conj of that row.
            complex<double> alpha{0.0, 0.0}, beta{0.0, 0.0};
            if (i < n) {
                if (j < n) alpha = p.r(i, j);
                else beta = p.r(i, j);
            } else {
                if (j < n) beta = std::conj(p.r(i, j));
                else alpha = std::conj(p.r(i, j));
            }
            const complex<double> sum = alpha + beta;
            const complex<double> dif = alpha - beta;
            S(2 * i, 2 * j) = sum.real();
            S(2 * i, 2 * j + 1) = -dif.imag();
            S(2 * i + 1, 2 * j) = sum.imag();
            S(2 * i + 1, 2 * j + 1) = dif.real();
        }
    }
    return S;
}

Eigen::MatrixXd initial_micro_cm(const ThermalState& state) {
    const int n2 = 2 * state.n();
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(2 * n2, 2 * n2);
    for (int j = 0; j < n2; ++j) {
        const double v = state.occupation_for_slot(j) + 0.5;
        sigma(2 * j, 2 * j) = v;
        sigma(2 * j + 1, 2 * j + 1) = v;
    }
    return sigma;
}

Eigen::MatrixXd collective_projector(int n) {
    const double w = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(4, 4 * n);
    for (int i = 0; i < n; ++i) {
        P(0, 2 * i) = w;                 // Q1 over signal q
        P(1, 2 * i + 1) = w;             // P1 over signal p
        P(2, 2 * (n + i)) = w;           // Q2 over idler q
        P(3, 2 * (n + i) + 1) = w;       // P2 over idler p
    }
    return P;
}

CollectiveCM micro_cm_project(const Propagator& p, const ThermalState& state) {
    const Eigen::MatrixXd S = symplectic_from_propagator(p);
    const Eigen::MatrixXd sigma0 = initial_micro_cm(state);
    const Eigen::MatrixXd sigma_t = S * sigma0 * S.transpose();
    const Eigen::MatrixXd P = collective_projector(p.n);
    CollectiveCM cm;
    cm.sigma = P * sigma_t * P.transpose();
    return cm;
}

CollectiveCM micro_cm_evolve_and_project(const ModelConfig& cfg, const ThermalState& state, double tau) {
    const FrequencyGrid grid = build_grid(cfg);
    return micro_cm_project(propagator_for(cfg, grid, tau), state);
}

} // namespace oracle
} // namespace mpdc
