#include "doctest.h"

#include <set>
#include <sstream>

#include "netlaw/graph.hpp"
#include "netlaw/graph_io.hpp"
#include "netlaw/rng.hpp"
#include "oracles.hpp"

using namespace netlaw;

namespace {

// 6 nodes, 9 edges, written down once and shared with the oracle checks
const std::vector<oracle::LabelEdge> kSixNodeFixture = {
    {"n0", "n3"}, {"n1", "n0"}, {"n2", "n5"}, {"n3", "n4"}, {"n4", "n0"},
    {"n5", "n1"}, {"n0", "n2"}, {"n2", "n1"}, {"n4", "n5"},
};

std::vector<std::string> labels_of(const Graph& g, std::span<const NodeId> ids) {
    std::vector<std::string> out;
    for (auto id : ids) out.push_back(g.label(id));
    return out;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("from_edge_list builds dense ids in first-seen order") {
    const std::vector<oracle::LabelEdge> edges = {{"a", "b"}, {"b", "c"}};
    const auto g = Graph::from_edge_list(edges, true);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "a");
    CHECK(g.label(1) == "b");
    CHECK(g.label(2) == "c");
    CHECK(g.find("c").value() == 2);
    CHECK_FALSE(g.find("zzz").has_value());
}

TEST_CASE("self-loops and duplicates are dropped and counted") {
    const std::vector<oracle::LabelEdge> edges = {{"a", "a"}, {"a", "b"}, {"a", "b"}};
    const auto g = Graph::from_edge_list(edges, true);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.build_stats().self_loops_dropped == 1);
    CHECK(g.build_stats().duplicates_dropped == 1);
}

TEST_CASE("undirected graphs treat reversed pairs as duplicates") {
    const std::vector<oracle::LabelEdge> edges = {{"a", "b"}, {"b", "a"}, {"b", "c"}};
    const auto g = Graph::from_edge_list(edges, false);
    CHECK(g.edge_count() == 2);
    CHECK(g.build_stats().duplicates_dropped == 1);
}

TEST_CASE("six-node fixture adjacency matches the dictionary oracle") {
    const auto want = oracle::neighbor_map(kSixNodeFixture, true);
    const auto g = Graph::from_edge_list(kSixNodeFixture, true);
    CHECK(g.edge_count() == 9);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto it = want.find(g.label(u));
        const auto got = labels_of(g, g.out_neighbors(u));
        if (it == want.end())
            CHECK(got.empty());
        else
            CHECK(got == it->second);
    }
}

TEST_CASE("degree_sequence on a star graph") {
    std::vector<oracle::LabelEdge> edges;
    for (int i = 1; i <= 10; ++i) edges.push_back({"hub", "leaf" + std::to_string(i)});
    const auto g = Graph::from_edge_list(edges, true);
    const auto out = degree_sequence(g, DegreeMode::out);
    const auto in = degree_sequence(g, DegreeMode::in);
    CHECK(out.degrees[0] == 10);
    CHECK(in.degrees[0] == 0);
    for (NodeId leaf = 1; leaf <= 10; ++leaf) {
        CHECK(out.degrees[leaf] == 0);
        CHECK(in.degrees[leaf] == 1);
    }
}

TEST_CASE("degree_sequence matches exhaustive edge-scan oracle") {
    const auto g = Graph::from_edge_list(kSixNodeFixture, true);
    std::vector<std::uint32_t> in(g.node_count(), 0), out(g.node_count(), 0);
    g.for_each_edge([&](NodeId u, NodeId v) {
        ++out[u];
        ++in[v];
    });
    CHECK(degree_sequence(g, DegreeMode::out).degrees == out);
    CHECK(degree_sequence(g, DegreeMode::in).degrees == in);
    std::vector<std::uint32_t> total(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) total[u] = in[u] + out[u];
    CHECK(degree_sequence(g, DegreeMode::total).degrees == total);
}

TEST_CASE("degree sums equal edge_count in every direction") {
    const auto g = Graph::from_edge_list(kSixNodeFixture, true);
    std::uint64_t sum_in = 0, sum_out = 0;
    for (auto d : degree_sequence(g, DegreeMode::in).degrees) sum_in += d;
    for (auto d : degree_sequence(g, DegreeMode::out).degrees) sum_out += d;
    CHECK(sum_in == g.edge_count());
    CHECK(sum_out == g.edge_count());
}

TEST_CASE("giant_component_size on K5 and disjoint triangles") {
    std::vector<oracle::LabelEdge> k5;
    for (char a = 'a'; a <= 'e'; ++a)
        for (char b = static_cast<char>(a + 1); b <= 'e'; ++b)
            k5.push_back({std::string(1, a), std::string(1, b)});
    CHECK(giant_component_size(Graph::from_edge_list(k5, false)) == 5);

    const std::vector<oracle::LabelEdge> triangles = {
        {"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"},
    };
    CHECK(giant_component_size(Graph::from_edge_list(triangles, true)) == 3);
}

TEST_CASE("giant component of a random 50-node graph matches union-find oracle") {
    Rng rng(2024);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int i = 0; i < 40; ++i) {
        const auto a = static_cast<NodeId>(rng.uniform_index(50));
        const auto b = static_cast<NodeId>(rng.uniform_index(50));
        if (a != b) edges.emplace_back(a, b);
    }
    const auto g = Graph::from_index_edges(50, edges, true);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
    g.for_each_edge([&](NodeId u, NodeId v) { kept.emplace_back(u, v); });
    CHECK(giant_component_size(g) == oracle::giant_by_union_find(50, kept));
    CHECK(giant_component_size(g) <= g.node_count());
}

TEST_CASE("giant component equals node_count iff weakly connected") {
    const std::vector<oracle::LabelEdge> path = {{"a", "b"}, {"c", "b"}, {"c", "d"}};
    CHECK(giant_component_size(Graph::from_edge_list(path, true)) == 4);
    CHECK(giant_component_size(Graph()) == 0);
}

TEST_CASE("round-trip through serialization preserves the deduplicated edge set") {
    Rng rng(99);
    for (const bool directed : {true, false}) {
        // random labeled edges with deliberate self-loops and duplicates
        std::vector<oracle::LabelEdge> edges;
        for (int i = 0; i < 60; ++i) {
            auto a = "v" + std::to_string(rng.uniform_index(12));
            auto b = "v" + std::to_string(rng.uniform_index(12));
            edges.push_back({a, b});
        }
        const auto g = Graph::from_edge_list(edges, directed);
        std::stringstream buf;
        write_edge_list(buf, g);
        const auto reread = read_edge_list(buf, "buf");
        CHECK(reread.directed.value() == directed);

        std::set<std::pair<std::string, std::string>> want;
        for (const auto& [s, d] : edges) {
            if (s == d) continue;
            if (directed)
                want.insert({s, d});
            else
                want.insert(s < d ? std::make_pair(s, d) : std::make_pair(d, s));
        }
        std::set<std::pair<std::string, std::string>> got;
        for (const auto& [s, d] : reread.edges)
            got.insert(directed || s < d ? std::make_pair(s, d) : std::make_pair(d, s));
        CHECK(got == want);
    }
}

TEST_CASE("edge-list parse errors name the line") {
    std::istringstream bad("a\tb\nc\n");
    CHECK_THROWS_WITH_AS(read_edge_list(bad, "edges.tsv"),
                         doctest::Contains("edges.tsv:2"), ParseError);
    std::istringstream extra("a\tb\tc\n");
    CHECK_THROWS_AS(read_edge_list(extra, "x"), ParseError);
    std::istringstream comments("# a comment\n\na\tb\n");
    CHECK(read_edge_list(comments, "x").edges.size() == 1);
}

TEST_CASE("empty labels are rejected") {
    const std::vector<oracle::LabelEdge> edges = {{"", "b"}};
    CHECK_THROWS_AS(Graph::from_edge_list(edges, true), std::invalid_argument);
}

TEST_CASE("degree file reader") {
    std::istringstream ok("3\n0\n12\n# note\n7\n");
    CHECK(read_degree_file(ok, "d") == std::vector<std::uint32_t>{3, 0, 12, 7});
    std::istringstream bad("3\nx\n");
    CHECK_THROWS_WITH_AS(read_degree_file(bad, "d.tsv"), doctest::Contains("d.tsv:2"),
                         ParseError);
}

TEST_CASE("node metadata reader") {
    std::istringstream ok("id,kind,likes\np1,bpo,120\nu9,individual,0\n");
    const auto rows = read_node_metadata(ok, "meta.csv");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].id == "p1");
    CHECK(rows[0].kind == NodeKind::bpo);
    CHECK(rows[0].likes == 120);
    CHECK(rows[1].kind == NodeKind::individual);

    std::istringstream badkind("id,kind,likes\np1,robot,3\n");
    CHECK_THROWS_WITH_AS(read_node_metadata(badkind, "m.csv"), doctest::Contains("m.csv:2"),
                         ParseError);
    std::istringstream badheader("likes,id\n");
    CHECK_THROWS_AS(read_node_metadata(badheader, "m.csv"), ParseError);
}

}  // TEST_SUITE
