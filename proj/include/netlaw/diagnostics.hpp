#pragma once

#include <cstdint>
#include <vector>

#include "netlaw/graph.hpp"

namespace netlaw {

struct PathLengthEstimate {
    std::size_t sample_sources = 0;
    double mean_distance = 0.0;
    std::uint64_t reachable_pairs = 0;
    std::uint64_t unreachable_pairs = 0;  // excluded from the mean, reported
};

// Mean hop distance over BFS trees from `sources` uniformly sampled distinct
// nodes (all nodes when sources >= node_count), on the undirected view.
// Unreachable pairs are excluded, not counted as zero. Deterministic per
// seed. Throws when no reachable pair exists.
PathLengthEstimate avg_path_length_sampled(const Graph& g, std::size_t sources,
                                           std::uint64_t seed);

enum class RemovalStrategy { random, targeted };

RemovalStrategy removal_strategy_from_string(std::string_view s);
std::string_view to_string(RemovalStrategy s);

struct RobustnessReport {
    RemovalStrategy strategy = RemovalStrategy::random;
    double fraction_removed = 0.0;
    std::size_t trials = 0;
    double giant_fraction_mean = 0.0;
    std::vector<double> giant_fraction_per_trial;
    std::size_t nodes_removed = 0;
};

// Removes ceil(fraction * n) nodes — the highest-total-degree ones for
// `targeted` (ties by dense id, degree measured once at the start), a fresh
// uniform sample per trial for `random` — and reports the giant weak
// component as a fraction of the pre-removal node count. Targeted removal is
// deterministic, so its trials all coincide. Throws when fraction > 1 or
// when ceil(fraction * n) == 0.
RobustnessReport removal_experiment(const Graph& g, double fraction, RemovalStrategy strategy,
                                    std::size_t trials, std::uint64_t seed);

}  // namespace netlaw
