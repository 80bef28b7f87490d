#include "netlaw/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace netlaw {
namespace {

// packs a (src,dst) pair for the dedup set
std::uint64_t pair_key(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph Graph::build(std::size_t node_count, std::span<const std::pair<NodeId, NodeId>> edges,
                   bool directed, std::vector<std::string> labels) {
    Graph g;
    g.directed_ = directed;
    g.labels_ = std::move(labels);
    g.index_.reserve(g.labels_.size());
    for (NodeId i = 0; i < g.labels_.size(); ++i) g.index_.emplace(g.labels_[i], i);

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    std::vector<std::pair<NodeId, NodeId>> kept;
    kept.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) {
            ++g.stats_.self_loops_dropped;
            continue;
        }
        // undirected graphs treat (a,b) and (b,a) as the same edge
        const auto key = directed ? pair_key(u, v) : pair_key(std::min(u, v), std::max(u, v));
        if (!seen.insert(key).second) {
            ++g.stats_.duplicates_dropped;
            continue;
        }
        kept.emplace_back(u, v);
    }

    g.offsets_.assign(node_count + 1, 0);
    for (const auto& [u, v] : kept) ++g.offsets_[u + 1];
    for (std::size_t i = 1; i <= node_count; ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.targets_.resize(kept.size());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : kept) g.targets_[cursor[u]++] = v;
    return g;
}

Graph Graph::from_edge_list(std::span<const std::pair<std::string, std::string>> edges,
                            bool directed) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::pair<NodeId, NodeId>> dense;
    dense.reserve(edges.size());
    auto intern = [&](const std::string& label) -> NodeId {
        if (label.empty()) throw std::invalid_argument("graph: empty node label");
        auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };
    for (const auto& [src, dst] : edges) {
        const NodeId s = intern(src);  // sequenced: src label interns first
        const NodeId d = intern(dst);
        dense.emplace_back(s, d);
    }
    const std::size_t n = labels.size();
    return build(n, dense, directed, std::move(labels));
}

Graph Graph::from_index_edges(std::size_t node_count,
                              std::span<const std::pair<NodeId, NodeId>> edges, bool directed) {
    std::vector<std::string> labels(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels[i] = std::to_string(i);
    return build(node_count, edges, directed, std::move(labels));
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

DegreeSequence degree_sequence(const Graph& g, DegreeMode mode) {
    const std::size_t n = g.node_count();
    DegreeSequence seq;
    seq.mode = mode;
    seq.degrees.assign(n, 0);
    const bool count_out = !g.directed() || mode == DegreeMode::out || mode == DegreeMode::total;
    const bool count_in = !g.directed() || mode == DegreeMode::in || mode == DegreeMode::total;
    for (NodeId u = 0; u < n; ++u) {
        const auto nbrs = g.out_neighbors(u);
        if (count_out) seq.degrees[u] += static_cast<std::uint32_t>(nbrs.size());
        if (count_in)
            for (NodeId v : nbrs) ++seq.degrees[v];
    }
    return seq;
}

DegreeMode degree_mode_from_string(std::string_view s) {
    if (s == "in") return DegreeMode::in;
    if (s == "out") return DegreeMode::out;
    if (s == "total") return DegreeMode::total;
    throw std::invalid_argument("unknown degree mode: " + std::string(s));
}

std::string_view to_string(DegreeMode mode) {
    switch (mode) {
        case DegreeMode::in: return "in";
        case DegreeMode::out: return "out";
        case DegreeMode::total: return "total";
    }
    return "?";
}

UndirectedView::UndirectedView(const Graph& g) {
    const std::size_t n = g.node_count();
    offsets_.assign(n + 1, 0);
    g.for_each_edge([&](NodeId u, NodeId v) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    });
    for (std::size_t i = 1; i <= n; ++i) offsets_[i] += offsets_[i - 1];
    targets_.resize(offsets_[n]);
    std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    g.for_each_edge([&](NodeId u, NodeId v) {
        targets_[cursor[u]++] = v;
        targets_[cursor[v]++] = u;
    });
}

std::size_t UndirectedView::largest_component(const std::vector<char>* removed) const {
    const std::size_t n = node_count();
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack;
    std::size_t best = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s] || (removed && (*removed)[s])) continue;
        std::size_t size = 0;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            ++size;
            for (NodeId v : neighbors(u)) {
                if (seen[v] || (removed && (*removed)[v])) continue;
                seen[v] = 1;
                stack.push_back(v);
            }
        }
        best = std::max(best, size);
    }
    return best;
}

std::size_t giant_component_size(const Graph& g) {
    if (g.node_count() == 0) return 0;
    return UndirectedView(g).largest_component();
}

}  // namespace netlaw
