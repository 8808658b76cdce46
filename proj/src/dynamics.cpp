#include "mpdc/dynamics.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

namespace mpdc {

using std::complex;

namespace {
const complex<double> kI{0.0, 1.0};
}

Propagator pairwise_propagator(const FrequencyGrid& grid, const ModelConfig& cfg, double tau) {
    const int n = grid.n();
    Propagator p;
    p.tau = tau;
    p.n = n;
    p.r = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    const double ch = std::cosh(tau);
    const double sh = std::sinh(tau);
    const complex<double> ephi = std::exp(-kI * cfg.pump_phase);
    for (int i = 0; i < n; ++i) {
        const double w1 = grid.slot_frequency(i);
        const double w2 = grid.slot_frequency(n + i); // energy-conserving partner
        const complex<double> f1 = std::exp(-kI * (w1 * tau));
        const complex<double> f2 = std::exp(kI * (w2 * tau));
        p.r(i, i) = f1 * ch;
        p.r(i, n + i) = f1 * ephi * sh;
        p.r(n + i, i) = f2 * std::conj(ephi) * sh;
        p.r(n + i, n + i) = f2 * ch;
    }
    return p;
}

Eigen::MatrixXcd build_M(const FrequencyGrid& grid, const ModelConfig& cfg) {
    if (cfg.pattern == Pattern::Pairwise)
        throw ConfigError("build_M: the pairwise pattern has a closed-form propagator");
    const int n = grid.n();
    const complex<double> b = std::exp(-kI * cfg.pump_phase);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        const complex<double> a = kI * (grid.delta1 * (grid.m - i));
        M(i, i) = a;
        M(n + i, n + i) = a;
        for (int j = 0; j < n; ++j) {
            M(i, n + j) = b;
            M(n + i, j) = std::conj(b);
        }
    }
    return M;
}

Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& M, double tau) {
    return (M * tau).exp();
}

Propagator one_to_all_propagator(const FrequencyGrid& grid, const ModelConfig& cfg, double tau) {
    const int n = grid.n();
    Propagator p;
    p.tau = tau;
    p.n = n;
    p.r = matrix_exponential(build_M(grid, cfg), tau);
    const complex<double> f1inv = std::exp(-kI * (cfg.omega1_bar * tau));
    const complex<double> f2inv = std::exp(kI * (cfg.omega2_bar * tau));
    p.r.topRows(n) *= f1inv;
    p.r.bottomRows(n) *= f2inv;
    return p;
}

Propagator propagator_for(const ModelConfig& cfg, const FrequencyGrid& grid, double tau) {
    return cfg.pattern == Pattern::Pairwise ? pairwise_propagator(grid, cfg, tau)
                                            : one_to_all_propagator(grid, cfg, tau);
}

CollectiveCoefficients collective_coefficients(const Propagator& p) {
    const int n = p.n;
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    CollectiveCoefficients c;
    c.m.resize(n);
    c.n_.resize(n);
    c.t.resize(n);
    c.u.resize(n);
    for (int j = 0; j < 2 * n; ++j) {
        const complex<double> top = p.r.col(j).head(n).sum() * norm;
        const complex<double> bot = p.r.col(j).tail(n).sum() * norm;
        if (j < n) {
            c.m(j) = top;
            c.t(j) = bot;
        } else {
            c.n_(j - n) = top;
            c.u(j - n) = bot;
        }
    }
    return c;
}

double bogoliubov_defect(const Propagator& p) {
    const int n = p.n;
    double worst = 0.0;
    for (int k = 0; k < 2 * n; ++k) {
        const double plus = p.r.row(k).head(n).squaredNorm();
        const double minus = p.r.row(k).tail(n).squaredNorm();
        const double target = k < n ? 1.0 : -1.0;
        const double scale = std::max(1.0, plus + minus);
        worst = std::max(worst, std::abs(plus - minus - target) / scale);
    }
    return worst;
}

} // namespace mpdc
