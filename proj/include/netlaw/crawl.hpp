#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netlaw/graph.hpp"

namespace netlaw {

// In-process stand-in for a paged graph API. Pages partition each node's
// neighbor list in stable order: the stored out-neighbors for a directed
// snapshot, the symmetrized neighbor list for an undirected one. Page
// computation is stateless, so concurrent readers are fine; the optional
// call limit is enforced with an atomic counter.
class PagedApi {
public:
    PagedApi(const Graph& snapshot, std::size_t page_size,
             std::optional<std::uint64_t> call_limit = std::nullopt);

    struct Page {
        std::span<const NodeId> neighbors;
        bool has_more = false;
    };

    /// Serve one page. Every fetch counts one API call; throws once the
    /// call limit (if any) is exhausted. Pages past the end are empty.
    Page fetch(NodeId node, std::size_t page_index) const;

    std::size_t page_count(NodeId node) const;
    std::size_t page_size() const { return page_size_; }
    std::uint64_t calls_served() const { return calls_.load(); }
    const Graph& snapshot() const { return *snapshot_; }

private:
    const Graph* snapshot_;
    std::size_t page_size_;
    std::optional<std::uint64_t> call_limit_;
    mutable std::atomic<std::uint64_t> calls_{0};

    std::span<const NodeId> adjacency(NodeId node) const;

    // symmetrized adjacency, materialized only for undirected snapshots
    std::vector<std::uint64_t> undir_offsets_;
    std::vector<NodeId> undir_targets_;
};

PagedApi serve_snapshot(const Graph& g, std::size_t page_size);

struct CrawlCall {
    NodeId node;
    std::uint32_t page_index;
    std::vector<NodeId> returned;
};

struct CrawlResult {
    std::vector<std::pair<NodeId, NodeId>> edges;  // discovery order, no duplicates
    std::vector<NodeId> visit_order;
    std::uint64_t api_calls = 0;
    std::vector<NodeId> frontier_remaining;        // queue order at stop
    bool truncated = false;
    std::vector<CrawlCall> call_log;               // one record per API call
};

constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

// FIFO breadth-first crawl from the given seed labels (processed in order,
// duplicates ignored). A node's pages are fetched consecutively and
// completely before the frontier advances; the crawl stops when the frontier
// empties or the budget (in API calls) runs out, setting truncated. A node
// whose pages were only partially fetched stays at the head of
// frontier_remaining. Throws on an unknown seed label.
CrawlResult bfs_crawl(const PagedApi& api, std::span<const std::string> seed_labels,
                      std::uint64_t budget = kUnlimitedBudget);

struct CoverageReport {
    double node_recall = 0.0;
    double edge_recall = 0.0;
    std::uint64_t nodes_discovered = 0;
    std::uint64_t edges_discovered = 0;
};

/// Recall of the crawl against the snapshot it ran on. Discovered nodes are
/// everything visited, returned on a page, or still queued.
CoverageReport crawl_coverage(const CrawlResult& result, const Graph& truth);

/// Discovered edges as a Graph (labels taken from the snapshot; directedness
/// inherited).
Graph crawl_to_graph(const CrawlResult& result, const Graph& snapshot);

/// JSON-lines log, one `{"node":…,"page_index":…,"returned":[…]}` per call.
void write_crawl_log(std::ostream& out, const CrawlResult& result, const Graph& snapshot);

}  // namespace netlaw
