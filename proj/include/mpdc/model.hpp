#ifndef MPDC_MODEL_HPP
#define MPDC_MODEL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mpdc/errors.hpp"

namespace mpdc {

// Interaction pattern between the two wave-packets:
//  - Pairwise: each signal mode couples to exactly one idler mode (n disjoint pairs),
//  - OneToAll: every signal mode couples to every idler mode (n^2 couplings).
enum class Pattern { Pairwise, OneToAll };

// Base of the logarithm used for the logarithmic negativity.
enum class LogBase { Natural, Two };

std::string to_string(Pattern p);
std::string to_string(LogBase b);
Pattern pattern_from_string(const std::string& s);
LogBase log_base_from_string(const std::string& s);

// All frequencies are expressed in units of the coupling strength w and all
// times in units of 1/w (tau = w t).  theta = k_B T / (hbar w) is the
// dimensionless temperature.  Pump phase enters the propagators but cancels
// from every covariance entry.
struct ModelConfig {
    Pattern pattern = Pattern::Pairwise;
    int m = 0;                  // modes per wave-packet: n = 2m + 1
    double omega1_bar = 200.0;  // signal central frequency / w
    double omega2_bar = 400.0;  // idler central frequency / w
    double bw1 = 0.02;          // signal bandwidth / w
    double bw2 = 0.02;          // idler bandwidth / w
    double theta = 0.0;         // dimensionless temperature, 0 = vacuum
    double pump_phase = 0.0;
    LogBase log_base = LogBase::Natural;

    int n() const { return 2 * m + 1; }
    double omega0_bar() const { return omega1_bar + omega2_bar; }

    // Throws ConfigError on an invalid combination.
    void validate() const;
};

// Symmetric comb of n = 2m + 1 frequencies per wave-packet, centred on the
// central frequency, spanning the bandwidth.  delta = bw / (2m), zero for m = 0.
struct FrequencyGrid {
    int m = 0;
    std::vector<double> freqs1; // ascending, size n
    std::vector<double> freqs2; // ascending, size n
    double delta1 = 0.0;
    double delta2 = 0.0;

    int n() const { return 2 * m + 1; }

    // Frequency carried by operator slot j of the propagator basis,
    // j in [0, 2n): slots [0, n) are signal annihilators ordered by ascending
    // frequency; slots [n, 2n) are idler creators ordered by DESCENDING
    // frequency, so that slot n + i is the energy-conserving partner of slot i
    // and the rotating-frame detuning of slot j is delta * (m - (j mod n)) for
    // both blocks.
    double slot_frequency(int j) const;
};

FrequencyGrid build_grid(const ModelConfig& cfg);

// Vertex of the interaction graph: wave in {1, 2}, k in [-m, m].
struct Vertex {
    int wave = 1;
    int k = 0;
    bool operator==(const Vertex& other) const = default;
};

// Bipartite coupling graph between signal and idler modes.  All edges carry
// the same weight (1 in units of w).
struct InteractionGraph {
    int m = 0;
    Pattern pattern = Pattern::Pairwise;
    std::vector<std::pair<Vertex, Vertex>> edges;

    int n() const { return 2 * m + 1; }
    std::size_t vertex_count() const { return 2 * static_cast<std::size_t>(n()); }
};

InteractionGraph build_graph(const ModelConfig& cfg);

// Degree of a vertex; throws std::invalid_argument for a vertex outside the graph.
int vertex_degree(const InteractionGraph& g, const Vertex& v);

// True when every vertex is reachable from every other through coupling edges.
bool is_connected(const InteractionGraph& g);

} // namespace mpdc

#endif
