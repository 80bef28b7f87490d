#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "netlaw/graph.hpp"
#include "netlaw/rng.hpp"

namespace netlaw {

/// Parameters of a Barabasi-Albert preferential-attachment graph.
struct BaParams {
    std::size_t n = 0;       // target node count
    std::size_t m = 1;       // edges added per new node, n >= m >= 1
    std::uint64_t seed = 0;
};

/// Parameters of an Erdos-Renyi G(n,p) graph.
struct ErParams {
    std::size_t n = 0;
    double p = 0.0;          // in [0,1]
    std::uint64_t seed = 0;
};

/// Linear attachment kernel: p_i = k_i / sum_j k_j.
/// Throws if every degree is zero (degenerate distribution).
std::vector<double> attachment_probabilities(std::span<const std::uint32_t> degrees);

/// One roulette-wheel draw proportional to degree. Same kernel the BA
/// generator applies at every growth step.
NodeId preferential_pick(std::span<const std::uint32_t> degrees, Rng& rng);

// Growth process: seed graph is the complete graph on m nodes, then each new
// node attaches to m distinct existing nodes sampled without replacement
// proportional to current total degree (repeated roulette-wheel draws,
// duplicates rejected). Stored as one edge per attachment, new node -> target,
// with directed=false. Identical params give byte-identical edge lists.
//
// m=1 corner: the seed graph K1 has no edges, so the first attachment is
// forced (node 1 -> node 0); afterwards every node has positive degree.
Graph generate_ba(const BaParams& params);

// Each unordered pair is present independently with probability p
// (geometric skipping, so sparse graphs cost O(n + edges)).
Graph generate_er(const ErParams& params);

}  // namespace netlaw
