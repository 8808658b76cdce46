#include "mpdc/model.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace mpdc {

std::string to_string(Pattern p) {
    return p == Pattern::Pairwise ? "pairwise" : "one-to-all";
}

std::string to_string(LogBase b) {
    return b == LogBase::Natural ? "natural" : "two";
}

Pattern pattern_from_string(const std::string& s) {
    if (s == "pairwise") return Pattern::Pairwise;
    if (s == "one-to-all") return Pattern::OneToAll;
    throw ConfigError("unknown pattern '" + s + "' (expected 'pairwise' or 'one-to-all')");
}

LogBase log_base_from_string(const std::string& s) {
    if (s == "natural") return LogBase::Natural;
    if (s == "two") return LogBase::Two;
    throw ConfigError("unknown log base '" + s + "' (expected 'natural' or 'two')");
}

void ModelConfig::validate() const {
    if (m < 0) throw ConfigError("m must be non-negative");
    if (!(omega1_bar > 0.0) || !(omega2_bar > 0.0))
        throw ConfigError("central frequencies must be positive");
    if (bw1 < 0.0 || bw2 < 0.0) throw ConfigError("bandwidths must be non-negative");
    if (omega1_bar - bw1 / 2.0 <= 0.0 || omega2_bar - bw2 / 2.0 <= 0.0)
        throw ConfigError("bandwidth too large: a mode frequency would be non-positive");
    if (theta < 0.0) throw ConfigError("theta must be non-negative");
    if (!std::isfinite(omega1_bar) || !std::isfinite(omega2_bar) ||
        !std::isfinite(bw1) || !std::isfinite(bw2) || !std::isfinite(theta) ||
        !std::isfinite(pump_phase))
        throw ConfigError("configuration values must be finite");
    // The one-to-all generator assumes one detuning ladder shared by both
    // wave-packets; unequal bandwidths are undefined for it.
    if (pattern == Pattern::OneToAll && m > 0 && bw1 != bw2)
        throw ConfigError("one-to-all requires equal bandwidths (bw1 == bw2)");
}

double FrequencyGrid::slot_frequency(int j) const {
    const int nn = n();
    if (j < 0 || j >= 2 * nn) throw std::invalid_argument("slot index out of range");
    if (j < nn) return freqs1[static_cast<std::size_t>(j)];
    return freqs2[static_cast<std::size_t>(nn - 1 - (j - nn))];
}

FrequencyGrid build_grid(const ModelConfig& cfg) {
    cfg.validate();
    FrequencyGrid g;
    g.m = cfg.m;
    const int n = g.n();
    g.delta1 = cfg.m == 0 ? 0.0 : cfg.bw1 / (2.0 * cfg.m);
    g.delta2 = cfg.m == 0 ? 0.0 : cfg.bw2 / (2.0 * cfg.m);
    g.freqs1.resize(static_cast<std::size_t>(n));
    g.freqs2.resize(static_cast<std::size_t>(n));
    for (int k = -cfg.m; k <= cfg.m; ++k) {
        g.freqs1[static_cast<std::size_t>(k + cfg.m)] = cfg.omega1_bar + k * g.delta1;
        g.freqs2[static_cast<std::size_t>(k + cfg.m)] = cfg.omega2_bar + k * g.delta2;
    }
    if (g.freqs1.front() <= 0.0 || g.freqs2.front() <= 0.0)
        throw ConfigError("grid contains a non-positive frequency");
    return g;
}

InteractionGraph build_graph(const ModelConfig& cfg) {
    cfg.validate();
    InteractionGraph g;
    g.m = cfg.m;
    g.pattern = cfg.pattern;
    if (cfg.pattern == Pattern::Pairwise) {
        for (int k = -cfg.m; k <= cfg.m; ++k)
            g.edges.emplace_back(Vertex{1, k}, Vertex{2, -k});
    } else {
        for (int k = -cfg.m; k <= cfg.m; ++k)
            for (int l = -cfg.m; l <= cfg.m; ++l)
                g.edges.emplace_back(Vertex{1, k}, Vertex{2, l});
    }
    return g;
}

namespace {

int vertex_index(const InteractionGraph& g, const Vertex& v) {
    if ((v.wave != 1 && v.wave != 2) || v.k < -g.m || v.k > g.m)
        throw std::invalid_argument("vertex outside the interaction graph");
    return (v.wave - 1) * g.n() + (v.k + g.m);
}

} // namespace

int vertex_degree(const InteractionGraph& g, const Vertex& v) {
    vertex_index(g, v);
    int deg = 0;
    for (const auto& [a, b] : g.edges)
        if (a == v || b == v) ++deg;
    return deg;
}

bool is_connected(const InteractionGraph& g) {
    const std::size_t nv = g.vertex_count();
    if (nv == 0) return true;
    std::vector<std::vector<int>> adj(nv);
    for (const auto& [a, b] : g.edges) {
        const int ia = vertex_index(g, a);
        const int ib = vertex_index(g, b);
        adj[static_cast<std::size_t>(ia)].push_back(ib);
        adj[static_cast<std::size_t>(ib)].push_back(ia);
    }
    std::vector<char> seen(nv, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == nv;
}

} // namespace mpdc
