#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netlaw {

using NodeId = std::uint32_t;

/// Counters for records dropped during graph construction.
struct BuildStats {
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicates_dropped = 0;
};

// Immutable graph in compressed adjacency (CSR) form.
//
// Node ids are dense integers in [0, node_count) assigned in first-seen
// order; external labels are arbitrary UTF-8 strings. Self-loops and
// duplicate (src,dst) pairs are dropped at construction (counted in
// BuildStats). For an undirected graph each pair is stored exactly once,
// under the endpoint it was first seen from; (a,b) and (b,a) are the same
// edge there. Safe for concurrent reads once built.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(std::span<const std::pair<std::string, std::string>> edges,
                                bool directed);

    /// Build from already-dense node ids; labels become the decimal ids.
    /// Every id must be < node_count.
    static Graph from_index_edges(std::size_t node_count,
                                  std::span<const std::pair<NodeId, NodeId>> edges,
                                  bool directed);

    std::size_t node_count() const { return offsets_.size() - 1; }
    std::uint64_t edge_count() const { return targets_.size(); }
    bool directed() const { return directed_; }
    const BuildStats& build_stats() const { return stats_; }

    std::span<const NodeId> out_neighbors(NodeId u) const {
        return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
    }

    const std::string& label(NodeId u) const { return labels_[u]; }
    std::optional<NodeId> find(std::string_view label) const;

    /// Visit every stored edge as (src, dst), in storage order.
    template <class F>
    void for_each_edge(F&& f) const {
        for (NodeId u = 0; u < node_count(); ++u)
            for (NodeId v : out_neighbors(u)) f(u, v);
    }

private:
    std::vector<std::uint64_t> offsets_{0};
    std::vector<NodeId> targets_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    bool directed_ = true;
    BuildStats stats_;

    static Graph build(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges,
                       bool directed, std::vector<std::string> labels);
};

enum class DegreeMode { in, out, total };

/// Per-node degree counts under a fixed mode.
struct DegreeSequence {
    DegreeMode mode = DegreeMode::total;
    std::vector<std::uint32_t> degrees;
};

// For undirected graphs all three modes coincide (incident-edge count);
// the orientation of stored pairs is a storage artifact there.
DegreeSequence degree_sequence(const Graph& g, DegreeMode mode);

DegreeMode degree_mode_from_string(std::string_view s);
std::string_view to_string(DegreeMode mode);

// Symmetrized adjacency over a Graph, built once for traversals that ignore
// edge direction (weak components, hop distances). Neighbor lists may repeat
// a node when both u->v and v->u are stored; traversals must tolerate that.
class UndirectedView {
public:
    explicit UndirectedView(const Graph& g);

    std::size_t node_count() const { return offsets_.size() - 1; }
    std::span<const NodeId> neighbors(NodeId u) const {
        return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
    }

    /// Size of the largest component among nodes where removed[v] is false.
    /// Pass nullptr to keep every node.
    std::size_t largest_component(const std::vector<char>* removed = nullptr) const;

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<NodeId> targets_;
};

/// Size of the largest weakly connected component; 0 for the empty graph.
std::size_t giant_component_size(const Graph& g);

}  // namespace netlaw
