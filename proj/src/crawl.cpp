#include "netlaw/crawl.hpp"

#include <deque>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace netlaw {

PagedApi::PagedApi(const Graph& snapshot, std::size_t page_size,
                   std::optional<std::uint64_t> call_limit)
    : snapshot_(&snapshot), page_size_(page_size), call_limit_(call_limit) {
    if (page_size_ < 1) throw std::invalid_argument("PagedApi: page_size must be >= 1");
    if (!snapshot.directed()) {
        // serve the symmetric neighbor list, stored pairs are one-per-edge
        const std::size_t n = snapshot.node_count();
        undir_offsets_.assign(n + 1, 0);
        snapshot.for_each_edge([&](NodeId u, NodeId v) {
            ++undir_offsets_[u + 1];
            ++undir_offsets_[v + 1];
        });
        for (std::size_t i = 1; i <= n; ++i) undir_offsets_[i] += undir_offsets_[i - 1];
        undir_targets_.resize(undir_offsets_[n]);
        std::vector<std::uint64_t> cursor(undir_offsets_.begin(), undir_offsets_.end() - 1);
        snapshot.for_each_edge([&](NodeId u, NodeId v) {
            undir_targets_[cursor[u]++] = v;
            undir_targets_[cursor[v]++] = u;
        });
    }
}

std::span<const NodeId> PagedApi::adjacency(NodeId node) const {
    if (snapshot_->directed()) return snapshot_->out_neighbors(node);
    return {undir_targets_.data() + undir_offsets_[node],
            undir_targets_.data() + undir_offsets_[node + 1]};
}

std::size_t PagedApi::page_count(NodeId node) const {
    return (adjacency(node).size() + page_size_ - 1) / page_size_;
}

PagedApi::Page PagedApi::fetch(NodeId node, std::size_t page_index) const {
    if (node >= snapshot_->node_count())
        throw std::invalid_argument("PagedApi::fetch: unknown node id");
    const auto served = calls_.fetch_add(1) + 1;
    if (call_limit_ && served > *call_limit_)
        throw std::runtime_error("PagedApi: call limit exhausted");
    const auto adj = adjacency(node);
    const std::size_t begin = page_index * page_size_;
    Page page;
    if (begin < adj.size()) {
        const std::size_t len = std::min(page_size_, adj.size() - begin);
        page.neighbors = adj.subspan(begin, len);
        page.has_more = begin + len < adj.size();
    }
    return page;
}

PagedApi serve_snapshot(const Graph& g, std::size_t page_size) { return {g, page_size}; }

CrawlResult bfs_crawl(const PagedApi& api, std::span<const std::string> seed_labels,
                      std::uint64_t budget) {
    if (seed_labels.empty()) throw std::invalid_argument("bfs_crawl: no seeds given");
    const Graph& g = api.snapshot();
    const bool undirected = !g.directed();

    CrawlResult result;
    std::vector<char> enqueued(g.node_count(), 0);
    std::deque<NodeId> frontier;
    for (const auto& label : seed_labels) {
        const auto id = g.find(label);
        if (!id) throw std::runtime_error("bfs_crawl: unknown seed label '" + label + "'");
        if (!enqueued[*id]) {
            enqueued[*id] = 1;
            frontier.push_back(*id);
        }
    }

    // for undirected snapshots an edge can surface from both endpoints
    std::unordered_set<std::uint64_t> edge_seen;
    auto record_edge = [&](NodeId u, NodeId v) {
        if (undirected) {
            const NodeId a = std::min(u, v), b = std::max(u, v);
            if (!edge_seen.insert((static_cast<std::uint64_t>(a) << 32) | b).second) return;
        }
        result.edges.emplace_back(u, v);
    };

    while (!frontier.empty()) {
        if (result.api_calls == budget) {
            result.truncated = true;
            break;
        }
        const NodeId u = frontier.front();
        frontier.pop_front();
        result.visit_order.push_back(u);

        std::uint32_t page_index = 0;
        bool partial = false;
        for (;;) {
            if (result.api_calls == budget) {
                result.truncated = true;
                partial = true;
                break;
            }
            const auto page = api.fetch(u, page_index);
            ++result.api_calls;
            CrawlCall call{u, page_index, {page.neighbors.begin(), page.neighbors.end()}};
            result.call_log.push_back(std::move(call));
            for (NodeId v : page.neighbors) {
                record_edge(u, v);
                if (!enqueued[v]) {
                    enqueued[v] = 1;
                    frontier.push_back(v);
                }
            }
            if (!page.has_more) break;
            ++page_index;
        }
        if (partial) {
            result.frontier_remaining.push_back(u);  // resumable: u still has pages
            break;
        }
    }
    result.frontier_remaining.insert(result.frontier_remaining.end(), frontier.begin(),
                                     frontier.end());
    return result;
}

CoverageReport crawl_coverage(const CrawlResult& result, const Graph& truth) {
    std::vector<char> seen(truth.node_count(), 0);
    std::uint64_t nodes = 0;
    auto mark = [&](NodeId v) {
        if (!seen[v]) {
            seen[v] = 1;
            ++nodes;
        }
    };
    for (NodeId v : result.visit_order) mark(v);
    for (NodeId v : result.frontier_remaining) mark(v);
    for (const auto& [u, v] : result.edges) {
        mark(u);
        mark(v);
    }
    CoverageReport report;
    report.nodes_discovered = nodes;
    report.edges_discovered = result.edges.size();
    report.node_recall =
        truth.node_count() == 0 ? 1.0 : static_cast<double>(nodes) / truth.node_count();
    report.edge_recall = truth.edge_count() == 0
                             ? 1.0
                             : static_cast<double>(result.edges.size()) / truth.edge_count();
    return report;
}

Graph crawl_to_graph(const CrawlResult& result, const Graph& snapshot) {
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(result.edges.size());
    for (const auto& [u, v] : result.edges)
        edges.emplace_back(snapshot.label(u), snapshot.label(v));
    return Graph::from_edge_list(edges, snapshot.directed());
}

void write_crawl_log(std::ostream& out, const CrawlResult& result, const Graph& snapshot) {
    for (const auto& call : result.call_log) {
        nlohmann::ordered_json rec;
        rec["node"] = snapshot.label(call.node);
        rec["page_index"] = call.page_index;
        auto& returned = rec["returned"] = nlohmann::ordered_json::array();
        for (NodeId v : call.returned) returned.push_back(snapshot.label(v));
        out << rec.dump() << '\n';
    }
}

}  // namespace netlaw
