#ifndef MPDC_ANALYSIS_HPP
#define MPDC_ANALYSIS_HPP

#include <string>
#include <utility>
#include <vector>

#include "mpdc/gaussian.hpp"
#include "mpdc/model.hpp"

namespace mpdc {

// Columnar scan output.  The first column is the abscissa and must be
// strictly increasing; all columns share one length.
struct ScanResult {
    struct Column {
        std::string name;
        std::vector<double> values;
    };

    std::string label;
    std::vector<Column> columns;
    std::vector<std::pair<std::string, std::string>> metadata;

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().values.size(); }
    const Column& column(const std::string& name) const;
    void validate() const; // throws ConfigError on a malformed table
};

// Scan grid points are independent; evaluate them with OpenMP when parallel
// is set, or serially as the reference path (identical results either way).
struct ScanOptions {
    bool parallel = true;
};

// E_N of the collective state at interaction time tau.
double negativity_at(const ModelConfig& cfg, double tau);

// Closed-form entanglement birth time for the pairwise pattern:
//   tau_E = (1/2) asinh(2 sqrt(S0) / (N10 + N20 + 1)), 0 for vacuum.
double bte_pairwise_closed_form(const ThermalState& state);

// Birth time by bisection on |det gamma(tau)| - S0, evaluated through the
// propagator/coefficient route for either pattern (never through the
// closed-form CM, so the two BTE routes stay independent).
// Bracket doubles from [0, 1] up to tau = 64; bisection width 1e-10.
double bte_numeric(const ModelConfig& cfg);

// Smallest theta at which entanglement at fixed tau_i dies, by bisection on
// the S criterion sign (relative tolerance 1e-8, search ceiling theta = 1e6).
// Preconditions: entangled at theta = 0, else ConfigError.  Throws
// NumericalError when no crossing exists below the ceiling.
double critical_temperature(const ModelConfig& cfg, double tau_i);

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0; // max |y - (slope x + intercept)|
};

FitResult fit_slope(const std::vector<double>& x, const std::vector<double>& y);

// E_N vs n at fixed tau_i; n_list must be ascending odd values.
ScanResult scan_negativity_vs_n(const ModelConfig& cfg, double tau_i,
                                const std::vector<int>& n_list,
                                const ScanOptions& opts = {});

// Canonical figure data sets.  The pattern is forced per figure (2 is
// pairwise, 3-6 one-to-all); other config fields are respected.
//   2: theta, tau_E                                (closed form)
//   3: theta, tau_E_n3 .. tau_E_n11                (numeric BTE)
//   4: n, tau_E_theta30, tau_E_theta300, tau_E_theta3000
//   5: n, EN_vacuum, EN_thermal                    (thermal theta = cfg.theta, or 30 if unset)
//   6: theta, EN at cfg's n; grid ends past the critical temperature
// tau_i feeds figures 5 and 6.
ScanResult figure_series(const ModelConfig& cfg, int fig_id, double tau_i,
                         const ScanOptions& opts = {});

// Config echo used as scan metadata.
std::vector<std::pair<std::string, std::string>> config_metadata(const ModelConfig& cfg);

} // namespace mpdc

#endif
