#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "netlaw/graph.hpp"

namespace netlaw {

/// Malformed input line; the message names the source and line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge-list text format: one `src<TAB>dst` per line, UTF-8 labels, lines
// beginning '#' ignored, blank lines skipped. netlaw's own writers emit a
// `# directed=0|1` directive as the first line; the loader honours it, any
// other reader sees an ordinary comment. Files without the directive load
// as directed.
struct EdgeListFile {
    std::vector<std::pair<std::string, std::string>> edges;
    std::optional<bool> directed;  // from the directive, if present
};

EdgeListFile read_edge_list(std::istream& in, std::string_view source_name);
void write_edge_list(std::ostream& out, const Graph& g);

Graph load_graph(const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path, bool directed);
void save_graph(const std::filesystem::path& path, const Graph& g);

/// Degree file: single column of non-negative integers, one per node.
std::vector<std::uint32_t> read_degree_file(std::istream& in, std::string_view source_name);
std::vector<std::uint32_t> load_degree_file(const std::filesystem::path& path);

enum class NodeKind { bpo, individual };

struct NodeMeta {
    std::string id;
    NodeKind kind;
    std::uint64_t likes;
};

/// Node-metadata CSV with header `id,kind,likes`, kind in {bpo, individual}.
std::vector<NodeMeta> read_node_metadata(std::istream& in, std::string_view source_name);

}  // namespace netlaw
