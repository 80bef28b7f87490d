#include "netlaw/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "netlaw/rng.hpp"

namespace netlaw {
namespace {

// single-source hop distances over the undirected view; returns (sum of
// distances, reachable count)
std::pair<std::uint64_t, std::uint64_t> bfs_distances(const UndirectedView& view, NodeId source,
                                                      std::vector<std::int32_t>& dist,
                                                      std::vector<NodeId>& queue) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    std::uint64_t total = 0, reached = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        for (NodeId v : view.neighbors(u)) {
            if (dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            total += static_cast<std::uint64_t>(dist[v]);
            ++reached;
            queue.push_back(v);
        }
    }
    return {total, reached};
}

}  // namespace

PathLengthEstimate avg_path_length_sampled(const Graph& g, std::size_t sources,
                                           std::uint64_t seed) {
    if (g.node_count() == 0) throw std::invalid_argument("avg_path_length_sampled: empty graph");
    if (sources < 1) throw std::invalid_argument("avg_path_length_sampled: need >= 1 source");
    if (g.edge_count() == 0)
        throw std::runtime_error("avg_path_length_sampled: edgeless graph has no reachable pairs");

    const std::size_t n = g.node_count();
    std::vector<NodeId> picked;
    if (sources >= n) {
        picked.resize(n);
        std::iota(picked.begin(), picked.end(), 0);
    } else {
        Rng rng(seed);
        auto sample = rng.sample_without_replacement(static_cast<std::uint32_t>(n),
                                                     static_cast<std::uint32_t>(sources));
        picked.assign(sample.begin(), sample.end());
        std::sort(picked.begin(), picked.end());
    }

    const UndirectedView view(g);
    std::vector<std::int32_t> dist(n);
    std::vector<NodeId> queue;
    queue.reserve(n);
    std::uint64_t total = 0, reachable = 0, unreachable = 0;
    for (NodeId s : picked) {
        const auto [sum, reached] = bfs_distances(view, s, dist, queue);
        total += sum;
        reachable += reached;
        unreachable += (n - 1) - reached;
    }
    if (reachable == 0)
        throw std::runtime_error("avg_path_length_sampled: no reachable pairs from the sampled sources");

    PathLengthEstimate est;
    est.sample_sources = picked.size();
    est.mean_distance = static_cast<double>(total) / static_cast<double>(reachable);
    est.reachable_pairs = reachable;
    est.unreachable_pairs = unreachable;
    return est;
}

RemovalStrategy removal_strategy_from_string(std::string_view s) {
    if (s == "random") return RemovalStrategy::random;
    if (s == "targeted") return RemovalStrategy::targeted;
    throw std::invalid_argument("unknown removal strategy: " + std::string(s));
}

std::string_view to_string(RemovalStrategy s) {
    return s == RemovalStrategy::random ? "random" : "targeted";
}

RobustnessReport removal_experiment(const Graph& g, double fraction, RemovalStrategy strategy,
                                    std::size_t trials, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    if (!(fraction > 0.0) || fraction > 1.0)
        throw std::invalid_argument("removal_experiment: fraction must lie in (0, 1]");
    if (trials < 1) throw std::invalid_argument("removal_experiment: trials must be >= 1");
    const auto to_remove = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
    if (to_remove == 0)
        throw std::invalid_argument("removal_experiment: fraction removes zero nodes");
    if (to_remove > n)
        throw std::invalid_argument("removal_experiment: fraction removes more nodes than exist");

    const UndirectedView view(g);
    RobustnessReport report;
    report.strategy = strategy;
    report.fraction_removed = fraction;
    report.trials = trials;
    report.nodes_removed = to_remove;

    std::vector<char> removed(n, 0);
    if (strategy == RemovalStrategy::targeted) {
        const auto degs = degree_sequence(g, DegreeMode::total);
        std::vector<NodeId> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
            if (degs.degrees[a] != degs.degrees[b]) return degs.degrees[a] > degs.degrees[b];
            return a < b;  // ties by dense id
        });
        for (std::size_t i = 0; i < to_remove; ++i) removed[order[i]] = 1;
        const double gf = static_cast<double>(view.largest_component(&removed)) /
                          static_cast<double>(n);
        report.giant_fraction_per_trial.assign(trials, gf);  // deterministic
    } else {
        Rng rng(seed);
        for (std::size_t t = 0; t < trials; ++t) {
            std::fill(removed.begin(), removed.end(), 0);
            for (auto v : rng.sample_without_replacement(static_cast<std::uint32_t>(n),
                                                         static_cast<std::uint32_t>(to_remove)))
                removed[v] = 1;
            report.giant_fraction_per_trial.push_back(
                static_cast<double>(view.largest_component(&removed)) / static_cast<double>(n));
        }
    }
    report.giant_fraction_mean =
        std::accumulate(report.giant_fraction_per_trial.begin(),
                        report.giant_fraction_per_trial.end(), 0.0) /
        static_cast<double>(trials);
    return report;
}

}  // namespace netlaw
