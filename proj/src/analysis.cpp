#include "mpdc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mpdc {

const ScanResult::Column& ScanResult::column(const std::string& name) const {
    for (const auto& c : columns)
        if (c.name == name) return c;
    throw std::invalid_argument("no column named '" + name + "'");
}

void ScanResult::validate() const {
    if (columns.empty()) throw ConfigError("scan produced no columns");
    const std::size_t nrows = columns.front().values.size();
    if (nrows == 0) throw ConfigError("scan produced no rows");
    for (const auto& c : columns)
        if (c.values.size() != nrows)
            throw ConfigError("scan columns have unequal lengths");
    const auto& x = columns.front().values;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            throw ConfigError("scan abscissa is not strictly increasing");
}

namespace {

// Independent grid points: OpenMP over the index space, or the serial
// reference loop.  Exceptions are captured and rethrown once.
template <class F>
void for_each_index(std::size_t count, bool parallel, F&& f) {
#ifdef _OPENMP
    if (parallel) {
        std::exception_ptr err = nullptr;
        #pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(count); ++i) {
            try {
                f(static_cast<std::size_t>(i));
            } catch (...) {
                #pragma omp critical
                {
                    if (!err) err = std::current_exception();
                }
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)parallel;
#endif
    for (std::size_t i = 0; i < count; ++i) f(i);
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return v;
}

ModelConfig with_n(ModelConfig cfg, int n) {
    if (n < 1 || n % 2 == 0) throw ConfigError("n must be a positive odd integer");
    cfg.m = (n - 1) / 2;
    return cfg;
}

// |det gamma| through the propagator/coefficient route.
double abs_det_gamma(const ModelConfig& cfg, const FrequencyGrid& grid,
                     const ThermalState& state, double tau) {
    const Propagator p = propagator_for(cfg, grid, tau);
    const CollectiveCM cm = cm_from_coefficients(state, collective_coefficients(p));
    return std::abs(cm.det_gamma());
}

constexpr double kBteCeiling = 64.0;
constexpr double kThetaCeiling = 1e6;
constexpr std::size_t kTempGridPoints = 40;
constexpr double kTempGridMax = 3000.0;

} // namespace

double negativity_at(const ModelConfig& cfg, double tau) {
    const FrequencyGrid grid = build_grid(cfg);
    const ThermalState state = make_thermal_state(grid, cfg.theta);
    return log_negativity(collective_cm(cfg, grid, state, tau), cfg.log_base);
}

double bte_pairwise_closed_form(const ThermalState& state) {
    const double s0 = state.N10 * state.N20 * (state.N10 + 1.0) * (state.N20 + 1.0);
    if (s0 == 0.0) return 0.0;
    return 0.5 * std::asinh(2.0 * std::sqrt(s0) / (state.N10 + state.N20 + 1.0));
}

double bte_numeric(const ModelConfig& cfg) {
    const FrequencyGrid grid = build_grid(cfg);
    const ThermalState state = make_thermal_state(grid, cfg.theta);
    const double s0 = state.N10 * state.N20 * (state.N10 + 1.0) * (state.N20 + 1.0);
    if (s0 == 0.0) return 0.0;
    // f(tau) = |det gamma| - S0 is negative at 0 and grows without bound;
    // a non-finite evaluation counts as "past the crossing".
    const auto above = [&](double tau) {
        const double dg = abs_det_gamma(cfg, grid, state, tau);
        return !std::isfinite(dg) || dg > s0;
    };
    double lo = 0.0;
    double hi = 1.0;
    while (!above(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > kBteCeiling)
            throw NumericalError("entanglement birth time not found below tau = 64");
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (above(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

double critical_temperature(const ModelConfig& cfg, double tau_i) {
    const FrequencyGrid grid = build_grid(cfg);
    // The propagator does not depend on theta: hoist the coefficients.
    const Propagator p = propagator_for(cfg, grid, tau_i);
    const CollectiveCoefficients coeffs = collective_coefficients(p);
    const auto s_at = [&](double theta) {
        const ThermalState state = make_thermal_state(grid, theta);
        const CollectiveCM cm = cm_from_coefficients(state, coeffs);
        return s_criterion(cm, state).S;
    };
    if (!(s_at(0.0) < 0.0))
        throw ConfigError("critical_temperature: state is not entangled at theta = 0");
    double lo = 0.0;
    double hi = 1.0;
    while (s_at(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > kThetaCeiling)
            throw NumericalError("no critical temperature found below theta = 1e6");
    }
    while (hi - lo > 1e-8 * hi) {
        const double mid = 0.5 * (lo + hi);
        (s_at(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

FitResult fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_slope needs two equal-length samples or more");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("fit_slope: degenerate abscissa");
    FitResult fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    for (std::size_t i = 0; i < x.size(); ++i)
        fit.residual = std::max(fit.residual,
                                std::abs(y[i] - (fit.slope * x[i] + fit.intercept)));
    return fit;
}

ScanResult scan_negativity_vs_n(const ModelConfig& cfg, double tau_i,
                                const std::vector<int>& n_list, const ScanOptions& opts) {
    if (n_list.empty()) throw ConfigError("scan_negativity_vs_n: empty n list");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 1 || n_list[i] % 2 == 0)
            throw ConfigError("scan_negativity_vs_n: n values must be positive odd integers");
        if (i > 0 && n_list[i] <= n_list[i - 1])
            throw ConfigError("scan_negativity_vs_n: n values must be ascending");
    }
    ScanResult scan;
    scan.label = "negativity_vs_n";
    scan.metadata = config_metadata(cfg);
    scan.metadata.emplace_back("tau_i", std::to_string(tau_i));
    std::vector<double> ns(n_list.begin(), n_list.end());
    std::vector<double> en(n_list.size());
    for_each_index(n_list.size(), opts.parallel, [&](std::size_t i) {
        en[i] = negativity_at(with_n(cfg, n_list[i]), tau_i);
    });
    scan.columns = {{"n", std::move(ns)}, {"EN", std::move(en)}};
    scan.validate();
    return scan;
}

namespace {

ScanResult figure2(const ModelConfig& base, const ScanOptions& opts) {
    ModelConfig cfg = base;
    cfg.pattern = Pattern::Pairwise;
    const FrequencyGrid grid = build_grid(cfg);
    ScanResult scan;
    scan.label = "fig2";
    std::vector<double> thetas = linspace(0.0, kTempGridMax, kTempGridPoints);
    std::vector<double> taue(thetas.size());
    for_each_index(thetas.size(), opts.parallel, [&](std::size_t i) {
        taue[i] = bte_pairwise_closed_form(make_thermal_state(grid, thetas[i]));
    });
    scan.columns = {{"theta", std::move(thetas)}, {"tau_E", std::move(taue)}};
    return scan;
}

ScanResult figure3(const ModelConfig& base, const ScanOptions& opts) {
    ModelConfig cfg = base;
    cfg.pattern = Pattern::OneToAll;
    const std::vector<int> ns = {3, 5, 7, 9, 11};
    ScanResult scan;
    scan.label = "fig3";
    std::vector<double> thetas = linspace(0.0, kTempGridMax, kTempGridPoints);
    scan.columns.push_back({"theta", thetas});
    for (int n : ns) {
        std::vector<double> col(thetas.size());
        const ModelConfig ncfg = with_n(cfg, n);
        for_each_index(thetas.size(), opts.parallel, [&](std::size_t i) {
            ModelConfig point = ncfg;
            point.theta = thetas[i];
            col[i] = bte_numeric(point);
        });
        scan.columns.push_back({"tau_E_n" + std::to_string(n), std::move(col)});
    }
    return scan;
}

ScanResult figure4(const ModelConfig& base, const ScanOptions& opts) {
    ModelConfig cfg = base;
    cfg.pattern = Pattern::OneToAll;
    const std::vector<int> ns = {1, 3, 5, 7, 9, 11};
    const std::vector<double> thetas = {30.0, 300.0, 3000.0};
    ScanResult scan;
    scan.label = "fig4";
    scan.columns.push_back({"n", std::vector<double>(ns.begin(), ns.end())});
    for (double theta : thetas) {
        std::vector<double> col(ns.size());
        for_each_index(ns.size(), opts.parallel, [&](std::size_t i) {
            ModelConfig point = with_n(cfg, ns[i]);
            point.theta = theta;
            col[i] = bte_numeric(point);
        });
        std::string name = "tau_E_theta" + std::to_string(static_cast<int>(theta));
        scan.columns.push_back({std::move(name), std::move(col)});
    }
    return scan;
}

ScanResult figure5(const ModelConfig& base, double tau_i, const ScanOptions& opts) {
    ModelConfig cfg = base;
    cfg.pattern = Pattern::OneToAll;
    const double theta_thermal = cfg.theta > 0.0 ? cfg.theta : 30.0;
    const std::vector<int> ns = {1, 3, 5, 7, 9, 11};
    ScanResult scan;
    scan.label = "fig5";
    scan.columns.push_back({"n", std::vector<double>(ns.begin(), ns.end())});
    std::vector<double> vac(ns.size()), thermal(ns.size());
    for_each_index(ns.size(), opts.parallel, [&](std::size_t i) {
        ModelConfig point = with_n(cfg, ns[i]);
        point.theta = 0.0;
        vac[i] = negativity_at(point, tau_i);
        point.theta = theta_thermal;
        thermal[i] = negativity_at(point, tau_i);
    });
    scan.columns.push_back({"EN_vacuum", std::move(vac)});
    scan.columns.push_back({"EN_thermal", std::move(thermal)});
    scan.metadata.emplace_back("theta_thermal", std::to_string(theta_thermal));
    return scan;
}

ScanResult figure6(const ModelConfig& base, double tau_i, const ScanOptions& opts) {
    ModelConfig cfg = base;
    cfg.pattern = Pattern::OneToAll;
    const double theta_c = critical_temperature(cfg, tau_i);
    const FrequencyGrid grid = build_grid(cfg);
    const Propagator p = propagator_for(cfg, grid, tau_i);
    const CollectiveCoefficients coeffs = collective_coefficients(p);
    ScanResult scan;
    scan.label = "fig6";
    std::vector<double> thetas = linspace(0.0, 1.3 * theta_c, kTempGridPoints);
    std::vector<double> en(thetas.size());
    for_each_index(thetas.size(), opts.parallel, [&](std::size_t i) {
        const ThermalState state = make_thermal_state(grid, thetas[i]);
        en[i] = log_negativity(cm_from_coefficients(state, coeffs), cfg.log_base);
    });
    scan.columns = {{"theta", std::move(thetas)}, {"EN", std::move(en)}};
    scan.metadata.emplace_back("theta_c", std::to_string(theta_c));
    return scan;
}

} // namespace

ScanResult figure_series(const ModelConfig& cfg, int fig_id, double tau_i,
                         const ScanOptions& opts) {
    ScanResult scan;
    switch (fig_id) {
        case 2: scan = figure2(cfg, opts); break;
        case 3: scan = figure3(cfg, opts); break;
        case 4: scan = figure4(cfg, opts); break;
        case 5: scan = figure5(cfg, tau_i, opts); break;
        case 6: scan = figure6(cfg, tau_i, opts); break;
        default: throw ConfigError("fig id must be in 2..6");
    }
    auto meta = config_metadata(cfg);
    meta.emplace_back("tau_i", std::to_string(tau_i));
    scan.metadata.insert(scan.metadata.begin(), meta.begin(), meta.end());
    scan.validate();
    return scan;
}

std::vector<std::pair<std::string, std::string>> config_metadata(const ModelConfig& cfg) {
    return {
        {"pattern", to_string(cfg.pattern)},
        {"m", std::to_string(cfg.m)},
        {"n", std::to_string(cfg.n())},
        {"omega1_bar", std::to_string(cfg.omega1_bar)},
        {"omega2_bar", std::to_string(cfg.omega2_bar)},
        {"bw1", std::to_string(cfg.bw1)},
        {"bw2", std::to_string(cfg.bw2)},
        {"theta", std::to_string(cfg.theta)},
        {"pump_phase", std::to_string(cfg.pump_phase)},
        {"log_base", to_string(cfg.log_base)},
    };
}

} // namespace mpdc
