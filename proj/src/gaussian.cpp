#include "mpdc/gaussian.hpp"

#include <cmath>
#include <complex>

namespace mpdc {

using std::complex;

double thermal_occupation(double omega_bar, double theta) {
    if (omega_bar <= 0.0) throw ConfigError("thermal_occupation: omega must be positive");
    if (theta < 0.0) throw ConfigError("thermal_occupation: theta must be non-negative");
    if (theta == 0.0) return 0.0;
    const double x = omega_bar / theta;
    const double denom = std::expm1(x); // overflows to +inf for large x: occupation 0
    return std::isinf(denom) ? 0.0 : 1.0 / denom;
}

double ThermalState::occupation_for_slot(int j) const {
    const int nn = n();
    if (j < 0 || j >= 2 * nn) throw std::invalid_argument("slot index out of range");
    if (j < nn) return nbar1[static_cast<std::size_t>(j)];
    return nbar2[static_cast<std::size_t>(nn - 1 - (j - nn))];
}

ThermalState make_thermal_state(const FrequencyGrid& grid, double theta) {
    ThermalState s;
    const int n = grid.n();
    s.nbar1.resize(static_cast<std::size_t>(n));
    s.nbar2.resize(static_cast<std::size_t>(n));
    double sum1 = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        s.nbar1[static_cast<std::size_t>(i)] = thermal_occupation(grid.freqs1[static_cast<std::size_t>(i)], theta);
        s.nbar2[static_cast<std::size_t>(i)] = thermal_occupation(grid.freqs2[static_cast<std::size_t>(i)], theta);
        sum1 += s.nbar1[static_cast<std::size_t>(i)];
        sum2 += s.nbar2[static_cast<std::size_t>(i)];
    }
    s.N10 = sum1 / n;
    s.N20 = sum2 / n;
    return s;
}

CollectiveCM cm_from_moments(double n1, double n2, complex<double> c) {
    CollectiveCM cm;
    const double a = n1 + 0.5;
    const double b = n2 + 0.5;
    const double cr = c.real();
    const double ci = c.imag();
    cm.sigma << a, 0.0, cr, ci,
                0.0, a, ci, -cr,
                cr, ci, b, 0.0,
                ci, -cr, 0.0, b;
    return cm;
}

CollectiveCM cm_pairwise(const ThermalState& state, const ModelConfig& cfg, double tau) {
    const double ch = std::cosh(tau);
    const double sh = std::sinh(tau);
    const double total = state.N10 + state.N20 + 1.0;
    const double n1 = state.N10 * ch * ch + (state.N20 + 1.0) * sh * sh;
    const double n2 = state.N20 * ch * ch + (state.N10 + 1.0) * sh * sh;
    const double phase = cfg.omega0_bar() * tau + cfg.pump_phase;
    const complex<double> c = 0.5 * std::sinh(2.0 * tau) * total *
                              std::exp(complex<double>(0.0, -phase));
    return cm_from_moments(n1, n2, c);
}

CollectiveCM cm_from_coefficients(const ThermalState& state, const CollectiveCoefficients& coeffs) {
    const int n = state.n();
    if (coeffs.m.size() != n)
        throw std::invalid_argument("coefficient/state dimension mismatch");
    double n1 = 0.0, n2 = 0.0;
    complex<double> c{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
        const double nb = state.occupation_for_slot(j);
        n1 += nb * std::norm(coeffs.m(j));
        n2 += (nb + 1.0) * std::norm(coeffs.t(j));
        c += (nb + 0.5) * coeffs.m(j) * std::conj(coeffs.t(j));
    }
    for (int j = 0; j < n; ++j) {
        const double nb = state.occupation_for_slot(n + j);
        n1 += (nb + 1.0) * std::norm(coeffs.n_(j));
        n2 += nb * std::norm(coeffs.u(j));
        c += (nb + 0.5) * coeffs.n_(j) * std::conj(coeffs.u(j));
    }
    return cm_from_moments(n1, n2, c);
}

CollectiveCM cm_one_to_all(const ThermalState& state, const CollectiveCoefficients& coeffs, double) {
    return cm_from_coefficients(state, coeffs);
}

CollectiveCM collective_cm(const ModelConfig& cfg, const FrequencyGrid& grid,
                           const ThermalState& state, double tau) {
    if (cfg.pattern == Pattern::Pairwise) return cm_pairwise(state, cfg, tau);
    const Propagator p = one_to_all_propagator(grid, cfg, tau);
    return cm_one_to_all(state, collective_coefficients(p), tau);
}

Invariants invariants(const CollectiveCM& cm) {
    Invariants inv;
    inv.I1 = cm.sigma.determinant();
    inv.I2 = cm.alpha().determinant() + cm.beta().determinant() + 2.0 * cm.det_gamma();
    return inv;
}

SCriterion s_criterion(const CollectiveCM& cm, const ThermalState& state) {
    SCriterion out;
    out.S0 = state.N10 * state.N20 * (state.N10 + 1.0) * (state.N20 + 1.0);
    const double dg = cm.det_gamma();
    out.S = out.S0 + 0.5 * (dg - std::abs(dg));
    out.entangled = out.S < 0.0;
    return out;
}

namespace {

// Smaller root of x^2 - D x + detSigma = 0 via the cancellation-free form.
double smaller_symplectic_root(double D, double det_sigma, const char* what) {
    const double disc = D * D - 4.0 * det_sigma;
    double sq;
    if (disc < 0.0) {
        if (disc < -1e-9 * std::max(1.0, D * D))
            throw NumericalError(std::string(what) + ": negative discriminant, unphysical covariance matrix");
        sq = 0.0;
    } else {
        sq = std::sqrt(disc);
    }
    const double denom = D + sq;
    if (denom <= 0.0)
        throw NumericalError(std::string(what) + ": non-positive symplectic spectrum");
    const double nu2 = 2.0 * det_sigma / denom;
    if (nu2 < 0.0)
        throw NumericalError(std::string(what) + ": negative squared symplectic eigenvalue");
    return std::sqrt(nu2);
}

} // namespace

double nu_tilde(const CollectiveCM& cm) {
    const double D = cm.alpha().determinant() + cm.beta().determinant() - 2.0 * cm.det_gamma();
    return smaller_symplectic_root(D, cm.sigma.determinant(), "nu_tilde");
}

double log_negativity(const CollectiveCM& cm, LogBase base) {
    const double two_nu = 2.0 * nu_tilde(cm);
    if (two_nu <= 0.0)
        throw NumericalError("log_negativity: vanishing symplectic eigenvalue");
    const double en = base == LogBase::Natural ? -std::log(two_nu) : -std::log2(two_nu);
    return std::max(0.0, en);
}

double min_symplectic_eigenvalue(const CollectiveCM& cm) {
    const double D = cm.alpha().determinant() + cm.beta().determinant() + 2.0 * cm.det_gamma();
    return smaller_symplectic_root(D, cm.sigma.determinant(), "min_symplectic_eigenvalue");
}

} // namespace mpdc
