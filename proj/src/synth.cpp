#include "netlaw/synth.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace netlaw {

std::vector<double> attachment_probabilities(std::span<const std::uint32_t> degrees) {
    const double total = std::accumulate(degrees.begin(), degrees.end(), 0.0);
    if (total <= 0.0)
        throw std::invalid_argument(
            "attachment_probabilities: all degrees are zero (degenerate distribution)");
    std::vector<double> probs(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) probs[i] = degrees[i] / total;
    return probs;
}

NodeId preferential_pick(std::span<const std::uint32_t> degrees, Rng& rng) {
    std::uint64_t total = 0;
    for (auto d : degrees) total += d;
    if (total == 0)
        throw std::invalid_argument("preferential_pick: all degrees are zero");
    std::uint64_t ticket = rng.uniform_index(total);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (ticket < degrees[i]) return static_cast<NodeId>(i);
        ticket -= degrees[i];
    }
    return static_cast<NodeId>(degrees.size() - 1);  // unreachable
}

Graph generate_ba(const BaParams& params) {
    if (params.m < 1 || params.n < params.m)
        throw std::invalid_argument("generate_ba: requires n >= m >= 1");
    const std::size_t n = params.n;
    const std::size_t m = params.m;
    Rng rng(params.seed);

    // every node appears in `tokens` once per unit of degree; a uniform draw
    // from it is a roulette-wheel draw proportional to degree
    std::vector<NodeId> tokens;
    tokens.reserve(m * (m - 1) + 2 * m * (n - m));
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m * (m - 1) / 2 + m * (n - m));

    for (NodeId i = 0; i < m; ++i) {
        for (NodeId j = i + 1; j < m; ++j) {
            edges.emplace_back(j, i);
            tokens.push_back(i);
            tokens.push_back(j);
        }
    }

    std::vector<char> picked(n, 0);
    std::vector<NodeId> step_targets;
    step_targets.reserve(m);
    for (NodeId v = static_cast<NodeId>(m); v < n; ++v) {
        step_targets.clear();
        while (step_targets.size() < m) {
            NodeId t;
            if (tokens.empty()) {
                t = 0;  // m=1: K1 seed has zero degree, first attachment is forced
            } else {
                t = tokens[rng.uniform_index(tokens.size())];
                if (picked[t]) continue;  // without replacement within a step
            }
            picked[t] = 1;
            step_targets.push_back(t);
        }
        for (NodeId t : step_targets) {
            edges.emplace_back(v, t);
            tokens.push_back(t);
            picked[t] = 0;
        }
        tokens.insert(tokens.end(), m, v);
    }
    return Graph::from_index_edges(n, edges, /*directed=*/false);
}

Graph generate_er(const ErParams& params) {
    if (params.p < 0.0 || params.p > 1.0)
        throw std::invalid_argument("generate_er: p must lie in [0,1]");
    const std::size_t n = params.n;
    std::vector<std::pair<NodeId, NodeId>> edges;
    if (n >= 2 && params.p > 0.0) {
        if (params.p >= 1.0) {
            edges.reserve(n * (n - 1) / 2);
            for (NodeId i = 0; i < n; ++i)
                for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        } else {
            // geometric skipping over the lexicographically ordered pairs
            Rng rng(params.seed);
            const double log_q = std::log1p(-params.p);
            std::uint64_t i = 0, j = 0;  // j == i means "before the first pair of row i"
            for (;;) {
                const double u = rng.uniform01();
                const double s = std::floor(std::log1p(-u) / log_q);
                const auto skip =
                    s >= 1e18 ? std::uint64_t{1} << 62 : static_cast<std::uint64_t>(s);
                // advance skip+1 positions through the pair sequence
                std::uint64_t steps = skip + 1;
                while (steps > 0 && i < n - 1) {
                    const std::uint64_t row_left = (n - 1) - std::max(j, i);
                    if (steps <= row_left) {
                        j = std::max(j, i) + steps;
                        steps = 0;
                    } else {
                        steps -= row_left;
                        ++i;
                        j = i;
                    }
                }
                if (i >= n - 1) break;
                edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
            }
        }
    }
    return Graph::from_index_edges(n, edges, /*directed=*/false);
}

}  // namespace netlaw
