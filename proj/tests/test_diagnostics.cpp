#include "doctest.h"

#include <cmath>

#include "netlaw/diagnostics.hpp"
#include "netlaw/synth.hpp"
#include "oracles.hpp"

using namespace netlaw;

namespace {

std::vector<std::vector<std::uint32_t>> undirected_adjacency(const Graph& g) {
    std::vector<std::vector<std::uint32_t>> adj(g.node_count());
    g.for_each_edge([&](NodeId u, NodeId v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    });
    return adj;
}

Graph star_graph(std::size_t leaves) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_index_edges(leaves + 1, edges, true);
}

}  // namespace

TEST_SUITE("diagnostics") {

TEST_CASE("complete graph has mean distance exactly one") {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < 5; ++i)
        for (NodeId j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    const auto g = Graph::from_index_edges(5, edges, false);
    const auto est = avg_path_length_sampled(g, 5, 1);
    CHECK(est.mean_distance == 1.0);
    CHECK(est.sample_sources == 5);
    CHECK(est.reachable_pairs == 20);
    CHECK(est.unreachable_pairs == 0);
}

TEST_CASE("three-node path averages 4/3") {
    const std::vector<std::pair<NodeId, NodeId>> edges = {{0, 1}, {1, 2}};
    const auto g = Graph::from_index_edges(3, edges, false);
    const auto est = avg_path_length_sampled(g, 3, 1);
    CHECK(est.mean_distance == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("sampled estimate stays within 5% of the all-pairs oracle on BA") {
    const auto g = generate_ba({1000, 3, 5});
    const double exact = oracle::exact_avg_path_length(undirected_adjacency(g));
    const auto est = avg_path_length_sampled(g, 100, 77);
    CHECK(std::abs(est.mean_distance - exact) / exact <= 0.05);
    // desk-scale reading of the log(N) claim
    CHECK(est.mean_distance <= 2.5 * std::log(1000.0));
    CHECK(est.mean_distance >= 1.0);
}

TEST_CASE("path length estimation error paths") {
    CHECK_THROWS_AS(avg_path_length_sampled(Graph(), 1, 0), std::invalid_argument);
    const auto edgeless = Graph::from_index_edges(4, {}, true);
    CHECK_THROWS_AS(avg_path_length_sampled(edgeless, 2, 0), std::runtime_error);
    const auto g = generate_ba({10, 2, 1});
    CHECK_THROWS_AS(avg_path_length_sampled(g, 0, 0), std::invalid_argument);
}

TEST_CASE("path length sampling is deterministic per seed") {
    const auto g = generate_ba({400, 3, 9});
    const auto a = avg_path_length_sampled(g, 50, 123);
    const auto b = avg_path_length_sampled(g, 50, 123);
    CHECK(a.mean_distance == b.mean_distance);
    CHECK(a.reachable_pairs == b.reachable_pairs);
}

TEST_CASE("targeted removal of the star hub shatters the graph") {
    const auto g = star_graph(100);  // 101 nodes
    const auto report = removal_experiment(g, 0.01, RemovalStrategy::targeted, 1, 0);
    CHECK(report.nodes_removed == 2);  // ceil(1.01); hub plus one leaf
    CHECK(report.giant_fraction_mean == doctest::Approx(1.0 / 101.0).epsilon(1e-12));
}

TEST_CASE("removal fractions outside (0,1] are rejected") {
    const auto g = star_graph(10);
    CHECK_THROWS_AS(removal_experiment(g, 0.0, RemovalStrategy::random, 1, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(removal_experiment(g, 1.5, RemovalStrategy::random, 1, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(removal_experiment(g, 0.5, RemovalStrategy::random, 0, 0),
                    std::invalid_argument);
}

TEST_CASE("targeted removal is deterministic across trials") {
    const auto g = generate_ba({300, 2, 4});
    const auto report = removal_experiment(g, 0.1, RemovalStrategy::targeted, 3, 99);
    REQUIRE(report.giant_fraction_per_trial.size() == 3);
    CHECK(report.giant_fraction_per_trial[0] == report.giant_fraction_per_trial[1]);
    CHECK(report.giant_fraction_per_trial[1] == report.giant_fraction_per_trial[2]);
    CHECK(report.giant_fraction_mean == report.giant_fraction_per_trial[0]);
}

TEST_CASE("random removal reproduces per seed and varies across trials") {
    const auto g = generate_ba({300, 2, 4});
    const auto a = removal_experiment(g, 0.1, RemovalStrategy::random, 5, 42);
    const auto b = removal_experiment(g, 0.1, RemovalStrategy::random, 5, 42);
    CHECK(a.giant_fraction_per_trial == b.giant_fraction_per_trial);
    for (double f : a.giant_fraction_per_trial) {
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
    }
}

TEST_CASE("hub attacks hurt BA graphs far more than random failures") {
    // seeded fixture: m=2 BA vs a matched-density ER control at 5% removal
    const auto ba = generate_ba({5000, 2, 6});
    const auto targeted = removal_experiment(ba, 0.05, RemovalStrategy::targeted, 1, 0);
    const auto random = removal_experiment(ba, 0.05, RemovalStrategy::random, 10, 1003);
    const double ba_gap = random.giant_fraction_mean - targeted.giant_fraction_mean;
    CHECK(ba_gap > 0.1);

    const double mean_degree = 2.0 * ba.edge_count() / ba.node_count();
    const auto er = generate_er({5000, mean_degree / 4999.0, 43});
    const auto er_t = removal_experiment(er, 0.05, RemovalStrategy::targeted, 1, 0);
    const auto er_r = removal_experiment(er, 0.05, RemovalStrategy::random, 10, 1003);
    CHECK(std::abs(er_r.giant_fraction_mean - er_t.giant_fraction_mean) < 0.1);
}

TEST_CASE("giant fraction matches a union-find recount after removal") {
    const auto g = generate_ba({200, 2, 6});
    const auto report = removal_experiment(g, 0.1, RemovalStrategy::targeted, 1, 0);

    const auto degs = degree_sequence(g, DegreeMode::total);
    std::vector<NodeId> order(g.node_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (degs.degrees[a] != degs.degrees[b]) return degs.degrees[a] > degs.degrees[b];
        return a < b;
    });
    std::vector<char> removed(g.node_count(), 0);
    for (std::size_t i = 0; i < report.nodes_removed; ++i) removed[order[i]] = 1;

    oracle::UnionFind uf(g.node_count());
    g.for_each_edge([&](NodeId u, NodeId v) {
        if (!removed[u] && !removed[v]) uf.unite(u, v);
    });
    std::size_t best = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!removed[v]) best = std::max(best, static_cast<std::size_t>(uf.size[uf.find(v)]));
    CHECK(report.giant_fraction_mean ==
          doctest::Approx(static_cast<double>(best) / g.node_count()).epsilon(1e-12));
}

}  // TEST_SUITE
