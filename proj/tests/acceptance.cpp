// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit 1 if any fails.
// Tolerances are pinned here as named constants; matrix comparisons are
// scaled by max(1, magnitude) because propagator and covariance entries grow
// like exp(n tau).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <Eigen/Dense>

#include "mpdc/analysis.hpp"
#include "mpdc/dynamics.hpp"
#include "mpdc/emit.hpp"
#include "mpdc/errors.hpp"
#include "mpdc/gaussian.hpp"
#include "mpdc/model.hpp"
#include "mpdc/oracle.hpp"

namespace {

using namespace mpdc;
using Clock = std::chrono::steady_clock;

// --- pinned tolerances and budgets -----------------------------------------

constexpr double kTolReduction = 1e-10;     // 1: n = 1 pattern equivalence
constexpr double kTolPropRoutes = 1e-8;     // 2a: RK4 vs closed/exponential propagator
constexpr double kTolMicroCm = 1e-9;        // 2b: projected micro CM vs collective CM
constexpr double kTolStructure = 1e-10;     // 3: Bogoliubov sum rules / CM symmetry
constexpr double kTolInvariant = 1e-9;      // 4: S invariant, scaled by max(1, S0)
constexpr double kTolBirthTime = 1e-8;      // 5: bisection vs closed-form birth time
constexpr double kSlopeTarget = 0.963;      // 6: base-2 negativity slope per mode
constexpr double kSlopeRelTol = 0.02;       //    +- 2 %
constexpr double kResidualFrac = 0.01;      //    linear-fit residual, fraction of range
constexpr double kThermalSlopeRelTol = 0.01;//    thermal slope vs vacuum slope
constexpr double kTolSpread = 1e-10;        // 8: n-independence of pairwise collectives
constexpr double kBudgetReduction = 1.0;    // seconds, criterion 1
constexpr double kBudgetDualRoute = 30.0;   // seconds, criterion 2
constexpr double kBudgetCli = 60.0;         // seconds, criterion 9 figure regeneration
constexpr int kRandomSamples = 200;         // criterion 3
constexpr unsigned kRandomSeed = 12345;     // criterion 3, fixed for reproducibility

// 2500 RK4 steps per unit tau holds the fourth-order error near 1e-10 at the
// largest grid point (n = 15, tau = 3) while fitting the wall-clock budget on
// a single core.
constexpr int kRk4Steps = 2500;

struct Failure {
    std::string msg;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure{msg};
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

double scaled_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, a.cwiseAbs().maxCoeff());
}

double scaled_diff4(const Eigen::Matrix4d& a, const Eigen::Matrix4d& b) {
    return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, a.cwiseAbs().maxCoeff());
}

ModelConfig make_config(Pattern pattern, int m, double theta, double phase = 0.0) {
    ModelConfig cfg;
    cfg.pattern = pattern;
    cfg.m = m;
    cfg.theta = theta;
    cfg.pump_phase = phase;
    return cfg;
}

// --- criterion 1: single-pair reduction ------------------------------------

void criterion_reduction(std::vector<std::string>&) {
    const auto t0 = Clock::now();
    for (double phase : {0.0, 0.9}) {
        for (double theta : {0.0, 300.0}) {
            for (double tau : {0.25, 1.0, 1.5, 2.0}) {
                const ModelConfig pw = make_config(Pattern::Pairwise, 0, theta, phase);
                const ModelConfig oa = make_config(Pattern::OneToAll, 0, theta, phase);
                const FrequencyGrid gpw = build_grid(pw);
                const FrequencyGrid goa = build_grid(oa);
                const Propagator ppw = propagator_for(pw, gpw, tau);
                const Propagator poa = propagator_for(oa, goa, tau);
                require(scaled_diff(ppw.r, poa.r) <= kTolReduction,
                        "propagators differ at theta=" + fmt(theta) + " tau=" + fmt(tau));

                const ThermalState state = make_thermal_state(gpw, theta);
                const CollectiveCM cpw = collective_cm(pw, gpw, state, tau);
                const CollectiveCM coa = collective_cm(oa, goa, state, tau);
                require(scaled_diff4(cpw.sigma, coa.sigma) <= kTolReduction,
                        "covariance matrices differ at theta=" + fmt(theta) + " tau=" + fmt(tau));
                // The negativity passes through fourth-order determinant
                // cancellation (~e^{4 tau} epsilon), so compare it where that
                // noise floor sits well below the tolerance; the covariance
                // comparison above covers the larger tau.
                if (tau <= 1.5)
                    require(std::abs(log_negativity(cpw, LogBase::Natural) -
                                     log_negativity(coa, LogBase::Natural)) <= kTolReduction,
                            "negativities differ at theta=" + fmt(theta) + " tau=" + fmt(tau));
            }
        }
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    require(elapsed < kBudgetReduction, "reduction checks took " + fmt(elapsed) + " s");
}

// --- criterion 2: dual-route dynamics --------------------------------------

void criterion_dual_route(std::vector<std::string>& info) {
    const auto t0 = Clock::now();

    // (a) RK4 integration vs pairwise closed form / matrix exponential.
    double worst_prop = 0.0;
    for (Pattern pattern : {Pattern::Pairwise, Pattern::OneToAll}) {
        for (int m : {1, 3, 7}) { // n = 3, 7, 15
            for (double tau : {0.5, 3.0}) {
                const ModelConfig cfg = make_config(pattern, m, 0.0, 0.4);
                const FrequencyGrid grid = build_grid(cfg);
                const Propagator primary = propagator_for(cfg, grid, tau);
                const Propagator rk4 = oracle::rk4_propagator(cfg, grid, tau, kRk4Steps);
                const double d = scaled_diff(primary.r, rk4.r);
                worst_prop = std::max(worst_prop, d);
                require(d <= kTolPropRoutes,
                        "propagator routes differ by " + fmt(d) + " (" +
                            to_string(pattern) + " n=" + fmt(2 * m + 1) +
                            " tau=" + fmt(tau) + ")");
            }
        }
    }

    // (b) thermal micro covariance evolved with the RK4 propagator and
    // projected onto the collective pair vs the collective-coefficient CM.
    double worst_cm = 0.0;
    for (Pattern pattern : {Pattern::Pairwise, Pattern::OneToAll}) {
        for (int m : {0, 1, 4}) { // n = 1, 3, 9
            for (double theta : {0.0, 30.0, 300.0}) {
                for (double tau : {0.1, 0.3324, 0.6978}) {
                    const ModelConfig cfg = make_config(pattern, m, theta, 0.25);
                    const FrequencyGrid grid = build_grid(cfg);
                    const ThermalState state = make_thermal_state(grid, theta);
                    const CollectiveCM micro = oracle::micro_cm_project(
                        oracle::rk4_propagator(cfg, grid, tau, kRk4Steps), state);
                    const CollectiveCM direct = collective_cm(cfg, grid, state, tau);
                    const double d = scaled_diff4(direct.sigma, micro.sigma);
                    worst_cm = std::max(worst_cm, d);
                    require(d <= kTolMicroCm,
                            "covariance routes differ by " + fmt(d) + " (" +
                                to_string(pattern) + " n=" + fmt(2 * m + 1) +
                                " theta=" + fmt(theta) + " tau=" + fmt(tau) + ")");
                }
            }
        }
    }

    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    info.push_back("worst propagator-route difference " + fmt(worst_prop) +
                   ", worst covariance-route difference " + fmt(worst_cm));
    require(elapsed < kBudgetDualRoute, "dual-route checks took " + fmt(elapsed) + " s");
}

// --- criterion 3: randomized structure checks ------------------------------

void criterion_randomized(std::vector<std::string>& info) {
    std::mt19937 rng(kRandomSeed);
    std::uniform_int_distribution<int> pattern_dist(0, 1);
    std::uniform_int_distribution<int> m_dist(0, 7); // n up to 15
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> theta_dist(1e-3, 1000.0);
    std::uniform_real_distribution<double> tau_dist(0.0, 3.0);

    double worst_defect = 0.0;
    double worst_sum_rule = 0.0;
    for (int sample = 0; sample < kRandomSamples; ++sample) {
        const Pattern pattern = pattern_dist(rng) == 0 ? Pattern::Pairwise : Pattern::OneToAll;
        const int m = m_dist(rng);
        const double theta = unit(rng) < 0.25 ? 0.0 : theta_dist(rng);
        const double tau = tau_dist(rng);
        const ModelConfig cfg = make_config(pattern, m, theta);
        const FrequencyGrid grid = build_grid(cfg);
        const Propagator p = propagator_for(cfg, grid, tau);
        const std::string where = " (sample " + fmt(sample) + ", " +
                                  to_string(pattern) + " n=" + fmt(2 * m + 1) +
                                  " theta=" + fmt(theta) + " tau=" + fmt(tau) + ")";

        const double defect = bogoliubov_defect(p);
        worst_defect = std::max(worst_defect, defect);
        require(defect <= kTolStructure, "Bogoliubov row sums off by " + fmt(defect) + where);

        const CollectiveCoefficients c = collective_coefficients(p);
        const double r1 = std::abs(c.sum_m2() - c.sum_n2() - 1.0) / std::max(1.0, c.sum_m2());
        const double r2 = std::abs(c.sum_u2() - c.sum_t2() - 1.0) / std::max(1.0, c.sum_u2());
        worst_sum_rule = std::max(worst_sum_rule, std::max(r1, r2));
        require(r1 <= kTolStructure, "collective commutator sum rule (wave 1) off by " + fmt(r1) + where);
        require(r2 <= kTolStructure, "collective commutator sum rule (wave 2) off by " + fmt(r2) + where);

        const ThermalState state = make_thermal_state(grid, theta);
        const CollectiveCM cm = cm_from_coefficients(state, c);
        const Eigen::Matrix4d& s = cm.sigma;
        const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
        require((s - s.transpose()).cwiseAbs().maxCoeff() / scale <= kTolStructure,
                "covariance not symmetric" + where);
        require(std::abs(s(0, 0) - s(1, 1)) / scale <= kTolStructure &&
                    std::abs(s(0, 1)) / scale <= kTolStructure,
                "alpha block not isotropic" + where);
        require(std::abs(s(2, 2) - s(3, 3)) / scale <= kTolStructure &&
                    std::abs(s(2, 3)) / scale <= kTolStructure,
                "beta block not isotropic" + where);
        require(std::abs(s(0, 2) + s(1, 3)) / scale <= kTolStructure &&
                    std::abs(s(0, 3) - s(1, 2)) / scale <= kTolStructure,
                "gamma block structure broken" + where);
        require(cm.det_gamma() <= 0.0, "det gamma positive" + where);
    }
    info.push_back(fmt(kRandomSamples) + " samples: worst row-sum defect " + fmt(worst_defect) +
                   ", worst sum-rule defect " + fmt(worst_sum_rule));
}

// --- criterion 4: conserved S invariant ------------------------------------

// v(tau) = det Sigma - (det alpha + det beta + 2 det gamma)/4 + 1/16 must stay
// at S0 = N10 N20 (N10+1)(N20+1) wherever the collective pair closes on
// itself exactly: the pairwise pattern at any bandwidth (the collective CM is
// the mean of exactly resonant pair CMs) and the one-to-all pattern at zero
// bandwidth.  At finite bandwidth the one-to-all detuning leaks amplitude
// into orthogonal collective modes, so that deviation is reported but not
// gated.
void criterion_invariant(std::vector<std::string>& info) {
    constexpr int kTauPoints = 50;
    constexpr double kTauMaxCollective = 1.6; // keeps determinant cancellation benign

    struct Case {
        Pattern pattern;
        int m;
        bool zero_bandwidth;
    };
    const std::vector<Case> cases = {
        {Pattern::Pairwise, 0, false}, {Pattern::Pairwise, 2, false},
        {Pattern::OneToAll, 0, true},  {Pattern::OneToAll, 1, true},
        {Pattern::OneToAll, 2, true},
    };

    double worst = 0.0;
    for (const Case& c : cases) {
        for (double theta : {0.0, 30.0, 300.0}) {
            ModelConfig cfg = make_config(c.pattern, c.m, theta, 0.35);
            if (c.zero_bandwidth) cfg.bw1 = cfg.bw2 = 0.0;
            const FrequencyGrid grid = build_grid(cfg);
            const ThermalState state = make_thermal_state(grid, theta);
            // The one-to-all collective pair squeezes n times faster.
            const double tau_max =
                c.pattern == Pattern::OneToAll ? kTauMaxCollective / cfg.n() : kTauMaxCollective;
            for (int i = 0; i < kTauPoints; ++i) {
                const double tau = tau_max * i / (kTauPoints - 1);
                const CollectiveCM cm = collective_cm(cfg, grid, state, tau);
                const Invariants inv = invariants(cm);
                const SCriterion s = s_criterion(cm, state);
                const double v = inv.I1 - inv.I2 / 4.0 + 1.0 / 16.0;
                const double dev = std::abs(v - s.S0) / std::max(1.0, s.S0);
                worst = std::max(worst, dev);
                require(dev <= kTolInvariant,
                        "invariant off S0 by " + fmt(dev) + " (" +
                            to_string(c.pattern) + " n=" + fmt(cfg.n()) + " theta=" +
                            fmt(theta) + " tau=" + fmt(tau) + ")");
                if (theta == 0.0) {
                    require(s.S0 == 0.0, "vacuum S0 not exactly zero");
                    require(s.S + std::abs(cm.det_gamma()) == 0.0,
                            "vacuum S + |det gamma| not exactly zero");
                }
            }
        }
    }

    // Vacuum exactness is a construction-level property, so it must also hold
    // for the finite-bandwidth one-to-all pattern.
    for (double tau : {0.1, 0.3324, 0.6978}) {
        const ModelConfig cfg = make_config(Pattern::OneToAll, 2, 0.0);
        const FrequencyGrid grid = build_grid(cfg);
        const ThermalState state = make_thermal_state(grid, 0.0);
        const CollectiveCM cm = collective_cm(cfg, grid, state, tau);
        const SCriterion s = s_criterion(cm, state);
        require(s.S0 == 0.0 && s.S + std::abs(cm.det_gamma()) == 0.0,
                "finite-bandwidth vacuum exactness broken at tau=" + fmt(tau));
    }

    // Ungated report: finite-bandwidth one-to-all leakage.
    double leak = 0.0;
    {
        const ModelConfig cfg = make_config(Pattern::OneToAll, 2, 300.0);
        const FrequencyGrid grid = build_grid(cfg);
        const ThermalState state = make_thermal_state(grid, 300.0);
        for (int i = 1; i <= 8; ++i) {
            const double tau = 0.32 * i / 8;
            const CollectiveCM cm = collective_cm(cfg, grid, state, tau);
            const Invariants inv = invariants(cm);
            const SCriterion s = s_criterion(cm, state);
            const double v = inv.I1 - inv.I2 / 4.0 + 1.0 / 16.0;
            leak = std::max(leak, std::abs(v - s.S0) / std::max(1.0, s.S0));
        }
    }
    info.push_back("worst gated deviation " + fmt(worst) +
                   "; finite-bandwidth one-to-all leakage (not gated) " + fmt(leak));
}

// --- criterion 5: birth-time routes ----------------------------------------

void criterion_birth_time(std::vector<std::string>& info) {
    double worst = 0.0;
    for (double theta : {10.0, 30.0, 100.0, 300.0, 1000.0}) {
        const ModelConfig cfg = make_config(Pattern::Pairwise, 0, theta);
        const FrequencyGrid grid = build_grid(cfg);
        const double closed = bte_pairwise_closed_form(make_thermal_state(grid, theta));
        const double numeric = bte_numeric(cfg);
        const double d = std::abs(closed - numeric);
        worst = std::max(worst, d);
        require(d <= kTolBirthTime,
                "birth-time routes differ by " + fmt(d) + " at theta=" + fmt(theta));
    }

    // Vacuum: both routes return exactly zero, for both patterns.
    const ModelConfig pw = make_config(Pattern::Pairwise, 0, 0.0);
    const ModelConfig oa = make_config(Pattern::OneToAll, 2, 0.0);
    require(bte_pairwise_closed_form(make_thermal_state(build_grid(pw), 0.0)) == 0.0,
            "closed-form vacuum birth time not exactly zero");
    require(bte_numeric(pw) == 0.0, "pairwise numeric vacuum birth time not exactly zero");
    require(bte_numeric(oa) == 0.0, "one-to-all numeric vacuum birth time not exactly zero");
    info.push_back("worst route difference " + fmt(worst));
}

// --- criterion 6: negativity grows linearly with mode count ----------------

void criterion_linearity(std::vector<std::string>& info) {
    const double tau_i = 0.3324;

    ModelConfig cfg = make_config(Pattern::OneToAll, 5, 0.0);
    cfg.log_base = LogBase::Two;
    const ScanResult base2 = figure_series(cfg, 5, tau_i);
    const auto& n = base2.column("n").values;
    const auto& vac = base2.column("EN_vacuum").values;
    const auto& thermal = base2.column("EN_thermal").values;

    const FitResult fit_vac = fit_slope(n, vac);
    const double range = *std::max_element(vac.begin(), vac.end()) -
                         *std::min_element(vac.begin(), vac.end());
    require(std::abs(fit_vac.slope - kSlopeTarget) <= kSlopeRelTol * kSlopeTarget,
            "base-2 vacuum slope " + fmt(fit_vac.slope) + " outside " + fmt(kSlopeTarget) +
                " +- " + fmt(100 * kSlopeRelTol) + " %");
    require(fit_vac.residual <= kResidualFrac * range,
            "vacuum fit residual " + fmt(fit_vac.residual) + " exceeds " +
                fmt(100 * kResidualFrac) + " % of range " + fmt(range));

    const FitResult fit_th = fit_slope(n, thermal);
    require(std::abs(fit_th.slope - fit_vac.slope) <= kThermalSlopeRelTol * fit_vac.slope,
            "thermal slope " + fmt(fit_th.slope) + " deviates from vacuum slope " +
                fmt(fit_vac.slope) + " by more than " + fmt(100 * kThermalSlopeRelTol) + " %");

    cfg.log_base = LogBase::Natural;
    const ScanResult natural = figure_series(cfg, 5, tau_i);
    const FitResult fit_nat = fit_slope(natural.column("n").values,
                                        natural.column("EN_vacuum").values);
    info.push_back("base-2 slope " + fmt(fit_vac.slope) + " (target " + fmt(kSlopeTarget) +
                   " +- 2 %), thermal slope " + fmt(fit_th.slope) + ", natural-log slope " +
                   fmt(fit_nat.slope) + " per mode (2 tau_i = " + fmt(2 * tau_i) + ")");
}

// --- criterion 7: qualitative trends ---------------------------------------

void strictly_increasing(const std::vector<double>& v, const std::string& what) {
    for (std::size_t i = 1; i < v.size(); ++i)
        require(v[i] > v[i - 1], what + " not strictly increasing at index " + fmt(double(i)));
}

void strictly_decreasing(const std::vector<double>& v, const std::string& what) {
    for (std::size_t i = 1; i < v.size(); ++i)
        require(v[i] < v[i - 1], what + " not strictly decreasing at index " + fmt(double(i)));
}

void criterion_trends(std::vector<std::string>& info) {
    const double tau_i = 0.3324;
    const ModelConfig base = make_config(Pattern::OneToAll, 2, 0.0);

    // Birth time rises with temperature (pairwise series, zero at theta = 0).
    const ScanResult fig2 = figure_series(base, 2, tau_i);
    require(fig2.column("tau_E").values.front() == 0.0, "pairwise birth time at theta=0 not zero");
    strictly_increasing(fig2.column("tau_E").values, "pairwise birth time vs theta");

    // ... for every collective size, and falls with the number of modes.
    const ScanResult fig3 = figure_series(base, 3, tau_i);
    const std::vector<std::string> n_cols = {"tau_E_n3", "tau_E_n5", "tau_E_n7",
                                             "tau_E_n9", "tau_E_n11"};
    for (const auto& col : n_cols)
        strictly_increasing(fig3.column(col).values, col + " vs theta");
    for (std::size_t i = 1; i < n_cols.size(); ++i)
        require(fig3.column(n_cols[i]).values.back() < fig3.column(n_cols[i - 1]).values.back(),
                "birth time not falling with mode count at the hottest grid point");

    const ScanResult fig4 = figure_series(base, 4, tau_i);
    for (const auto* col : {"tau_E_theta30", "tau_E_theta300", "tau_E_theta3000"})
        strictly_decreasing(fig4.column(col).values, std::string(col) + " vs n");

    // Negativity falls with temperature and dies past the critical point.
    const ScanResult fig6 = figure_series(base, 6, tau_i);
    const auto& en = fig6.column("EN").values;
    require(en.front() > 0.0, "negativity at theta=0 not positive");
    require(en.back() == 0.0, "negativity past the critical temperature not exactly zero");
    bool dead = false;
    for (std::size_t i = 1; i < en.size(); ++i) {
        if (dead || en[i] == 0.0) {
            require(en[i] == 0.0, "negativity revives after dying");
            dead = en[i] == 0.0 ? true : dead;
        } else {
            require(en[i] < en[i - 1], "positive negativity not strictly decreasing");
        }
    }
    require(dead, "negativity never reaches zero on the critical-temperature grid");

    // Collective enhancement of the critical temperature.
    for (double tau : {0.3324, 0.6978}) {
        const double pw = critical_temperature(make_config(Pattern::Pairwise, 0, 0.0), tau);
        const double oa = critical_temperature(make_config(Pattern::OneToAll, 2, 0.0), tau);
        require(oa > pw, "collective critical temperature not above pairwise at tau_i=" + fmt(tau));
        info.push_back("theta_c at tau_i=" + fmt(tau) + ": pairwise " + fmt(pw) +
                       ", one-to-all n=5 " + fmt(oa));
    }
    info.push_back("theta is k_B T / (hbar w); Kelvin equivalents depend on the physical "
                   "coupling rate w and are not part of this gate");
}

// --- criterion 8: pairwise collectives independent of n --------------------

void criterion_n_independence(std::vector<std::string>& info) {
    const double tau_i = 0.3324;
    for (double theta : {0.0, 30.0}) {
        std::vector<double> en, bte;
        for (int m = 0; m <= 5; ++m) { // n = 1, 3, ..., 11
            const ModelConfig cfg = make_config(Pattern::Pairwise, m, theta);
            en.push_back(negativity_at(cfg, tau_i));
            bte.push_back(bte_pairwise_closed_form(make_thermal_state(build_grid(cfg), theta)));
        }
        const double en_spread = *std::max_element(en.begin(), en.end()) -
                                 *std::min_element(en.begin(), en.end());
        const double bte_spread = *std::max_element(bte.begin(), bte.end()) -
                                  *std::min_element(bte.begin(), bte.end());
        require(en_spread <= kTolSpread,
                "negativity spread " + fmt(en_spread) + " at theta=" + fmt(theta));
        require(bte_spread <= kTolSpread,
                "birth-time spread " + fmt(bte_spread) + " at theta=" + fmt(theta));
        info.push_back("theta=" + fmt(theta) + ": negativity spread " + fmt(en_spread) +
                       ", birth-time spread " + fmt(bte_spread));
    }
}

// --- criterion 9: command-line round trip ----------------------------------

std::string g_tmpdir;

int run_cli(const std::string& args, bool capture = true) {
    std::string cmd = std::string(MPDC_CLI_PATH) + " " + args;
    if (capture) cmd += " > " + g_tmpdir + "/stdout.log";
    cmd += " 2> " + g_tmpdir + "/stderr.log";
    const int status = std::system(cmd.c_str());
    require(status != -1, "failed to spawn the CLI");
    return WIFEXITED(status) ? WEXITSTATUS(status) : 128;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_cli(std::vector<std::string>& info) {
    char tmpl[] = "/tmp/mpdc_acceptance_XXXXXX";
    require(mkdtemp(tmpl) != nullptr, "mkdtemp failed");
    g_tmpdir = tmpl;

    const std::vector<std::pair<int, std::string>> figures = {
        {2, "theta,tau_E"},
        {3, "theta,tau_E_n3,tau_E_n5,tau_E_n7,tau_E_n9,tau_E_n11"},
        {4, "n,tau_E_theta30,tau_E_theta300,tau_E_theta3000"},
        {5, "n,EN_vacuum,EN_thermal"},
        {6, "theta,EN"},
    };

    const auto t0 = Clock::now();
    for (const auto& [id, header] : figures) {
        const std::string out = g_tmpdir + "/fig" + std::to_string(id) + ".csv";
        require(run_cli("fig --fig-id " + std::to_string(id) + " --out " + out) == 0,
                "figure " + fmt(id) + " generation failed");
        const std::string text = slurp(out);
        require(text.substr(0, text.find('\n')) == header,
                "figure " + fmt(id) + " header mismatch");
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    require(elapsed < kBudgetCli, "figure regeneration took " + fmt(elapsed) + " s");

    // Parse back and re-emit: the CSV round trip must be byte-exact.
    for (const auto& [id, header] : figures) {
        const std::string out = g_tmpdir + "/fig" + std::to_string(id) + ".csv";
        std::ifstream in(out);
        const ScanResult scan = parse_csv(in);
        require(scan.rows() >= 6, "figure " + fmt(id) + " has too few rows");
        std::ostringstream re;
        emit_csv(scan, re);
        require(re.str() == slurp(out), "figure " + fmt(id) + " CSV round trip not byte-exact");
    }

    // Exit-code contract on representative failures.
    require(run_cli("cm --n 4") == 2, "even n must exit 2");
    require(run_cli("negativity --out /nonexistent-dir/x.csv") == 3, "unwritable output must exit 3");
    require(run_cli("tcrit --pattern one-to-all --n 5 --tau 2") == 4,
            "critical-temperature search past its ceiling must exit 4");

    info.push_back("figures 2-6 regenerated in " + fmt(elapsed) + " s (budget " +
                   fmt(kBudgetCli) + " s)");
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        void (*fn)(std::vector<std::string>&);
    };
    const std::vector<Criterion> criteria = {
        {1, "single-pair reduction: one-to-all with one mode matches the pairwise closed form",
         criterion_reduction},
        {2, "dual-route dynamics: RK4 integration matches closed-form/exponential propagators "
            "and the projected micro covariance",
         criterion_dual_route},
        {3, "randomized Bogoliubov and covariance structure checks", criterion_randomized},
        {4, "determinant invariant stays at its initial-occupation value, vacuum exactly zero",
         criterion_invariant},
        {5, "entanglement birth time: bisection agrees with the closed form", criterion_birth_time},
        {6, "log-negativity grows linearly with mode count", criterion_linearity},
        {7, "qualitative trends: temperature kills, collectivity protects", criterion_trends},
        {8, "pairwise collective quantities independent of the number of modes",
         criterion_n_independence},
        {9, "command-line round trip: figures regenerate, parse back, exit codes honored",
         criterion_cli},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::vector<std::string> info;
        const auto t0 = Clock::now();
        std::string error;
        try {
            c.fn(info);
        } catch (const Failure& f) {
            error = f.msg;
        } catch (const std::exception& e) {
            error = std::string("unexpected exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        if (error.empty()) {
            std::printf("[PASS] %d %s (%.2f s)\n", c.id, c.title, elapsed);
        } else {
            ++failures;
            std::printf("[FAIL] %d %s — %s\n", c.id, c.title, error.c_str());
        }
        for (const auto& line : info) std::printf("       %s\n", line.c_str());
    }

    if (failures > 0) {
        std::printf("acceptance: %d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
}
