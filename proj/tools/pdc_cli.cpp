// mpdc: collective entanglement of two multimode PDC wave-packets.
//
// Subcommands compute the Bogoliubov propagator, the 4x4 collective
// covariance matrix and its entanglement measures, birth time / critical
// temperature of the collective entanglement, and the canonical figure
// data sets.  Output goes to --out as CSV, JSON or a minimal SVG plot.

#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "mpdc/analysis.hpp"
#include "mpdc/config_io.hpp"
#include "mpdc/dynamics.hpp"
#include "mpdc/emit.hpp"
#include "mpdc/errors.hpp"
#include "mpdc/gaussian.hpp"
#include "mpdc/model.hpp"
#include "mpdc/oracle.hpp"

namespace {

using mpdc::ConfigError;
using mpdc::EmitFormat;
using mpdc::IoError;
using mpdc::ModelConfig;

constexpr double kBoltzmann = 1.380649e-23; // J/K (CODATA 2018, exact)
constexpr double kHbar = 1.054571817e-34;   // J s (CODATA 2018)

// Raw flag values; merged onto the config file in flag-wins order.
struct RawArgs {
    std::string pattern;
    int n = 1;
    double omega1 = 0.0, omega2 = 0.0;
    double bw1 = 0.0, bw2 = 0.0;
    double theta = 0.0;
    double phase = 0.0;
    double tau = 0.3324;
    std::string log_base;
    int fig_id = 0;
    std::string config_path;
    std::string out = "-";
    std::string format = "csv";
    double temp_kelvin = 0.0;
    double coupling_hz = 0.0;
    int threads = 0;
    bool serial = false;
    int oracle_steps = 2500;
};

void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path == "-") {
        fn(std::cout);
        std::cout.flush();
        if (!std::cout) throw IoError("failed while writing to stdout");
        return;
    }
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    fn(f);
    f.flush();
    if (!f) throw IoError("failed while writing '" + path + "'");
}

nlohmann::ordered_json metadata_json(const ModelConfig& cfg, double tau) {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : mpdc::config_metadata(cfg)) meta[k] = v;
    meta["tau"] = mpdc::format_double(tau);
    return meta;
}

int run_propagator(const ModelConfig& cfg, double tau, const std::string& out, EmitFormat fmt) {
    if (fmt == EmitFormat::Svg)
        throw ConfigError("--format svg is not available for 'propagator' (use csv or json)");
    const mpdc::FrequencyGrid grid = mpdc::build_grid(cfg);
    const mpdc::Propagator p = mpdc::propagator_for(cfg, grid, tau);
    with_output(out, [&](std::ostream& os) {
        if (fmt == EmitFormat::Csv) {
            os << "row,col,re,im\n";
            for (int r = 0; r < p.r.rows(); ++r)
                for (int c = 0; c < p.r.cols(); ++c)
                    os << r << ',' << c << ',' << mpdc::format_double(p.r(r, c).real()) << ','
                       << mpdc::format_double(p.r(r, c).imag()) << '\n';
        } else {
            nlohmann::ordered_json j;
            j["label"] = "propagator";
            j["metadata"] = metadata_json(cfg, tau);
            j["entry_columns"] = {"row", "col", "re", "im"};
            auto entries = nlohmann::ordered_json::array();
            for (int r = 0; r < p.r.rows(); ++r)
                for (int c = 0; c < p.r.cols(); ++c)
                    entries.push_back({r, c, p.r(r, c).real(), p.r(r, c).imag()});
            j["entries"] = std::move(entries);
            os << j.dump(2) << '\n';
        }
    });
    return 0;
}

int run_cm(const ModelConfig& cfg, double tau, const std::string& out, EmitFormat fmt) {
    if (fmt == EmitFormat::Svg)
        throw ConfigError("--format svg is not available for 'cm' (use csv or json)");
    const mpdc::FrequencyGrid grid = mpdc::build_grid(cfg);
    const mpdc::ThermalState state = mpdc::make_thermal_state(grid, cfg.theta);
    const mpdc::CollectiveCM cm = mpdc::collective_cm(cfg, grid, state, tau);
    const mpdc::Invariants inv = mpdc::invariants(cm);
    const mpdc::SCriterion sc = mpdc::s_criterion(cm, state);
    const double nu = mpdc::nu_tilde(cm);
    const double en = mpdc::log_negativity(cm, cfg.log_base);

    std::vector<std::pair<std::string, double>> rows;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            rows.emplace_back("sigma_" + std::to_string(i + 1) + std::to_string(j + 1),
                              cm.sigma(i, j));
    rows.emplace_back("det_alpha", cm.alpha().determinant());
    rows.emplace_back("det_beta", cm.beta().determinant());
    rows.emplace_back("det_gamma", cm.det_gamma());
    rows.emplace_back("I1", inv.I1);
    rows.emplace_back("I2", inv.I2);
    rows.emplace_back("S0", sc.S0);
    rows.emplace_back("S", sc.S);
    rows.emplace_back("entangled", sc.entangled ? 1.0 : 0.0);
    rows.emplace_back("nu_tilde", nu);
    rows.emplace_back("EN", en);

    with_output(out, [&](std::ostream& os) {
        if (fmt == EmitFormat::Csv) {
            os << "key,value\n";
            for (const auto& [k, v] : rows) os << k << ',' << mpdc::format_double(v) << '\n';
        } else {
            nlohmann::ordered_json j;
            j["label"] = "collective-cm";
            j["metadata"] = metadata_json(cfg, tau);
            for (const auto& [k, v] : rows) {
                if (k == "entangled")
                    j[k] = sc.entangled;
                else
                    j[k] = v;
            }
            os << j.dump(2) << '\n';
        }
    });
    return 0;
}

int run_negativity(const ModelConfig& cfg, double tau, const std::string& out, EmitFormat fmt) {
    const mpdc::FrequencyGrid grid = mpdc::build_grid(cfg);
    const mpdc::ThermalState state = mpdc::make_thermal_state(grid, cfg.theta);
    const mpdc::CollectiveCM cm = mpdc::collective_cm(cfg, grid, state, tau);
    const mpdc::SCriterion sc = mpdc::s_criterion(cm, state);

    mpdc::ScanResult scan;
    scan.label = "log-negativity";
    scan.metadata = mpdc::config_metadata(cfg);
    scan.columns = {{"tau", {tau}},
                    {"EN", {mpdc::log_negativity(cm, cfg.log_base)}},
                    {"S", {sc.S}},
                    {"S0", {sc.S0}}};
    mpdc::write_scan(scan, out, fmt);
    return 0;
}

int run_bte(const ModelConfig& cfg, const std::string& out, EmitFormat fmt) {
    double tau_e = 0.0;
    if (cfg.pattern == mpdc::Pattern::Pairwise) {
        const mpdc::FrequencyGrid grid = mpdc::build_grid(cfg);
        tau_e = mpdc::bte_pairwise_closed_form(mpdc::make_thermal_state(grid, cfg.theta));
    } else {
        tau_e = mpdc::bte_numeric(cfg);
    }
    mpdc::ScanResult scan;
    scan.label = "entanglement-birth-time";
    scan.metadata = mpdc::config_metadata(cfg);
    scan.columns = {{"theta", {cfg.theta}}, {"tau_E", {tau_e}}};
    mpdc::write_scan(scan, out, fmt);
    return 0;
}

int run_tcrit(const ModelConfig& cfg, double tau, const std::string& out, EmitFormat fmt) {
    const double theta_c = mpdc::critical_temperature(cfg, tau);
    mpdc::ScanResult scan;
    scan.label = "critical-temperature";
    scan.metadata = mpdc::config_metadata(cfg);
    scan.columns = {{"tau_i", {tau}}, {"theta_c", {theta_c}}};
    mpdc::write_scan(scan, out, fmt);
    return 0;
}

int run_scan_n(const ModelConfig& cfg, double tau, int max_n, const std::string& out,
               EmitFormat fmt, const mpdc::ScanOptions& opts) {
    std::vector<int> ns;
    for (int v = 1; v <= max_n; v += 2) ns.push_back(v);
    mpdc::ScanResult scan = mpdc::scan_negativity_vs_n(cfg, tau, ns, opts);
    const mpdc::FitResult fit =
        mpdc::fit_slope(scan.column("n").values, scan.column("EN").values);
    scan.metadata.emplace_back("fit_slope", mpdc::format_double(fit.slope));
    scan.metadata.emplace_back("fit_intercept", mpdc::format_double(fit.intercept));
    scan.metadata.emplace_back("fit_residual", mpdc::format_double(fit.residual));
    if (fmt != EmitFormat::Json) {
        std::cerr << "# EN ~ " << mpdc::format_double(fit.slope) << " * n + "
                  << mpdc::format_double(fit.intercept)
                  << " (max residual " << mpdc::format_double(fit.residual) << ")\n";
    }
    mpdc::write_scan(scan, out, fmt);
    return 0;
}

int run_fig(const ModelConfig& cfg, int fig_id, double tau, const std::string& out,
            EmitFormat fmt, const mpdc::ScanOptions& opts) {
    if (fig_id == 0) throw ConfigError("--fig-id is required for 'fig' (one of 2..6)");
    const mpdc::ScanResult scan = mpdc::figure_series(cfg, fig_id, tau, opts);
    mpdc::write_scan(scan, out, fmt);
    return 0;
}

// Debugging aid: cross-checks the production propagator/CM against the
// independent RK4 + micro-CM routes and prints the deviations.
int run_oracle(const ModelConfig& cfg, double tau, int steps_per_unit, const std::string& out,
               EmitFormat fmt) {
    if (fmt == EmitFormat::Svg)
        throw ConfigError("--format svg is not available for 'oracle' (use csv or json)");
    const mpdc::FrequencyGrid grid = mpdc::build_grid(cfg);
    const mpdc::ThermalState state = mpdc::make_thermal_state(grid, cfg.theta);

    const mpdc::Propagator primary = mpdc::propagator_for(cfg, grid, tau);
    const mpdc::Propagator rk4 = mpdc::oracle::rk4_propagator(cfg, grid, tau, steps_per_unit);
    const double r_scale = std::max(1.0, primary.r.cwiseAbs().maxCoeff());
    const double r_diff = (primary.r - rk4.r).cwiseAbs().maxCoeff() / r_scale;

    const mpdc::CollectiveCM cm = mpdc::collective_cm(cfg, grid, state, tau);
    const mpdc::CollectiveCM micro = mpdc::oracle::micro_cm_evolve_and_project(cfg, state, tau);
    const double cm_scale = std::max(1.0, cm.sigma.cwiseAbs().maxCoeff());
    const double cm_diff = (cm.sigma - micro.sigma).cwiseAbs().maxCoeff() / cm_scale;

    std::vector<std::pair<std::string, double>> rows = {
        {"r_diff_scaled", r_diff},
        {"cm_diff_scaled", cm_diff},
        {"bogoliubov_defect_primary", mpdc::bogoliubov_defect(primary)},
        {"bogoliubov_defect_rk4", mpdc::bogoliubov_defect(rk4)},
        {"rk4_steps_per_unit_tau", static_cast<double>(steps_per_unit)},
    };
    with_output(out, [&](std::ostream& os) {
        if (fmt == EmitFormat::Csv) {
            os << "key,value\n";
            for (const auto& [k, v] : rows) os << k << ',' << mpdc::format_double(v) << '\n';
        } else {
            nlohmann::ordered_json j;
            j["label"] = "oracle-cross-check";
            j["metadata"] = metadata_json(cfg, tau);
            for (const auto& [k, v] : rows) j[k] = v;
            os << j.dump(2) << '\n';
        }
    });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collective two-mode entanglement of multimode PDC wave-packets"};
    app.fallthrough(true);
    app.require_subcommand(1);

    RawArgs raw;
    app.add_option("--pattern", raw.pattern, "interaction pattern: pairwise | one-to-all");
    auto* n_opt = app.add_option("--n", raw.n, "modes per wave-packet (positive odd)");
    app.add_option("--omega1", raw.omega1, "signal central frequency / w (default 200)");
    app.add_option("--omega2", raw.omega2, "idler central frequency / w (default 400)");
    app.add_option("--bw1", raw.bw1, "signal bandwidth / w (default 0.02)");
    app.add_option("--bw2", raw.bw2, "idler bandwidth / w (default 0.02)");
    auto* theta_opt =
        app.add_option("--theta", raw.theta, "dimensionless temperature k_B T / (hbar w)");
    app.add_option("--tau", raw.tau, "interaction time in units of 1/w (default 0.3324)");
    app.add_option("--phase", raw.phase, "pump phase (default 0)");
    app.add_option("--log-base", raw.log_base, "negativity log base: natural | two");
    app.add_option("--fig-id", raw.fig_id, "figure data set id, 2..6 (for 'fig')");
    app.add_option("--config", raw.config_path, "config file ('key = value' lines)");
    app.add_option("--out", raw.out, "output path, '-' = stdout (default)");
    app.add_option("--format", raw.format, "output format: csv | json | svg (default csv)");
    auto* tk_opt = app.add_option("--temp-kelvin", raw.temp_kelvin,
                                  "physical temperature in K (needs --coupling-hz)");
    auto* ch_opt = app.add_option("--coupling-hz", raw.coupling_hz,
                                  "coupling strength w in Hz (needs --temp-kelvin)");
    app.add_option("--threads", raw.threads, "OpenMP thread count (0 = runtime default)");
    app.add_flag("--serial", raw.serial, "run scans on the serial reference path");
    tk_opt->needs(ch_opt);
    ch_opt->needs(tk_opt);
    tk_opt->excludes(theta_opt);
    theta_opt->excludes(tk_opt);

    CLI::App* sub_prop = app.add_subcommand("propagator", "dump the Bogoliubov propagator R(tau)");
    CLI::App* sub_cm =
        app.add_subcommand("cm", "collective covariance matrix, invariants and measures");
    CLI::App* sub_neg = app.add_subcommand("negativity", "logarithmic negativity at tau");
    CLI::App* sub_bte = app.add_subcommand("bte", "entanglement birth time at theta");
    CLI::App* sub_tcrit =
        app.add_subcommand("tcrit", "critical temperature at interaction time tau");
    CLI::App* sub_scan_n = app.add_subcommand("scan-n", "negativity versus mode number n");
    CLI::App* sub_fig = app.add_subcommand("fig", "canonical figure data sets (--fig-id 2..6)");
    CLI::App* sub_oracle =
        app.add_subcommand("oracle", "cross-check against the independent RK4/micro-CM routes");
    sub_oracle->group(""); // debugging aid; hidden from --help
    sub_oracle->add_option("--steps", raw.oracle_steps, "RK4 steps per unit tau (default 2500)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ModelConfig cfg;
        if (!raw.config_path.empty()) mpdc::apply_config_file(raw.config_path, cfg);
        if (app.count("--pattern")) cfg.pattern = mpdc::pattern_from_string(raw.pattern);
        if (n_opt->count()) {
            if (raw.n < 1 || raw.n % 2 == 0)
                throw ConfigError("--n must be a positive odd integer (n = 2m + 1), got " +
                                  std::to_string(raw.n));
            cfg.m = (raw.n - 1) / 2;
        }
        if (app.count("--omega1")) cfg.omega1_bar = raw.omega1;
        if (app.count("--omega2")) cfg.omega2_bar = raw.omega2;
        if (app.count("--bw1")) cfg.bw1 = raw.bw1;
        if (app.count("--bw2")) cfg.bw2 = raw.bw2;
        if (theta_opt->count()) cfg.theta = raw.theta;
        if (app.count("--phase")) cfg.pump_phase = raw.phase;
        if (app.count("--log-base")) cfg.log_base = mpdc::log_base_from_string(raw.log_base);
        if (tk_opt->count()) {
            if (!(raw.coupling_hz > 0.0))
                throw ConfigError("--coupling-hz must be positive, got " +
                                  mpdc::format_double(raw.coupling_hz));
            if (raw.temp_kelvin < 0.0)
                throw ConfigError("--temp-kelvin must be non-negative, got " +
                                  mpdc::format_double(raw.temp_kelvin));
            cfg.theta = kBoltzmann * raw.temp_kelvin / (kHbar * raw.coupling_hz);
        }
        cfg.validate();

        if (raw.threads > 0) {
#ifdef _OPENMP
            omp_set_num_threads(raw.threads);
#endif
        }
        const mpdc::ScanOptions opts{!raw.serial};
        const EmitFormat fmt = mpdc::emit_format_from_string(raw.format);

        if (sub_prop->parsed()) return run_propagator(cfg, raw.tau, raw.out, fmt);
        if (sub_cm->parsed()) return run_cm(cfg, raw.tau, raw.out, fmt);
        if (sub_neg->parsed()) return run_negativity(cfg, raw.tau, raw.out, fmt);
        if (sub_bte->parsed()) return run_bte(cfg, raw.out, fmt);
        if (sub_tcrit->parsed()) return run_tcrit(cfg, raw.tau, raw.out, fmt);
        if (sub_scan_n->parsed()) {
            const int max_n = n_opt->count() ? raw.n : 11;
            return run_scan_n(cfg, raw.tau, max_n, raw.out, fmt, opts);
        }
        if (sub_fig->parsed()) return run_fig(cfg, raw.fig_id, raw.tau, raw.out, fmt, opts);
        if (sub_oracle->parsed())
            return run_oracle(cfg, raw.tau, raw.oracle_steps, raw.out, fmt);
        throw ConfigError("no subcommand selected");
    } catch (const ConfigError& e) {
        std::cerr << "mpdc: config error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "mpdc: i/o error: " << e.what() << '\n';
        return 3;
    } catch (const mpdc::NumericalError& e) {
        std::cerr << "mpdc: numerical error: " << e.what() << '\n';
        return 4;
    }
}
