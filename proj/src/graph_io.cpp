#include "netlaw/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace netlaw {
namespace {

[[noreturn]] void fail(std::string_view source, std::size_t line, std::string_view what) {
    std::ostringstream msg;
    msg << source << ":" << line << ": " << what;
    throw ParseError(msg.str());
}

bool blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::string_view strip_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    return s;
}

std::uint64_t parse_u64(std::string_view tok, std::string_view source, std::size_t line,
                        std::string_view field) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail(source, line, std::string(field) + ": expected a non-negative integer, got '" +
                               std::string(tok) + "'");
    return value;
}

}  // namespace

EdgeListFile read_edge_list(std::istream& in, std::string_view source_name) {
    EdgeListFile out;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = strip_cr(raw);
        if (blank(line)) continue;
        if (line.front() == '#') {
            if (line == "# directed=0") out.directed = false;
            if (line == "# directed=1") out.directed = true;
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string_view::npos)
            fail(source_name, lineno, "malformed edge record: missing destination field");
        std::string_view src = line.substr(0, tab);
        std::string_view dst = line.substr(tab + 1);
        if (dst.find('\t') != std::string_view::npos)
            fail(source_name, lineno, "malformed edge record: extra field");
        if (src.empty() || dst.empty())
            fail(source_name, lineno, "malformed edge record: empty label");
        out.edges.emplace_back(std::string(src), std::string(dst));
    }
    return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# directed=" << (g.directed() ? 1 : 0) << "\n";
    g.for_each_edge([&](NodeId u, NodeId v) { out << g.label(u) << '\t' << g.label(v) << '\n'; });
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge-list file: " + path.string());
    auto file = read_edge_list(in, path.string());
    return Graph::from_edge_list(file.edges, file.directed.value_or(true));
}

Graph load_graph(const std::filesystem::path& path, bool directed) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge-list file: " + path.string());
    auto file = read_edge_list(in, path.string());
    return Graph::from_edge_list(file.edges, directed);
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write edge-list file: " + path.string());
    write_edge_list(out, g);
}

std::vector<std::uint32_t> read_degree_file(std::istream& in, std::string_view source_name) {
    std::vector<std::uint32_t> degrees;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = strip_cr(raw);
        if (blank(line)) continue;
        if (line.front() == '#') continue;
        const auto value = parse_u64(line, source_name, lineno, "degree");
        if (value > 0xffffffffULL) fail(source_name, lineno, "degree out of range");
        degrees.push_back(static_cast<std::uint32_t>(value));
    }
    return degrees;
}

std::vector<std::uint32_t> load_degree_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open degree file: " + path.string());
    return read_degree_file(in, path.string());
}

std::vector<NodeMeta> read_node_metadata(std::istream& in, std::string_view source_name) {
    std::vector<NodeMeta> rows;
    std::string raw;
    std::size_t lineno = 0;
    if (!std::getline(in, raw)) fail(source_name, 1, "missing header");
    ++lineno;
    if (strip_cr(raw) != "id,kind,likes")
        fail(source_name, 1, "expected header 'id,kind,likes'");
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = strip_cr(raw);
        if (blank(line)) continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos)
            fail(source_name, lineno, "malformed metadata record: expected 3 fields");
        NodeMeta meta;
        meta.id = std::string(line.substr(0, c1));
        const auto kind = line.substr(c1 + 1, c2 - c1 - 1);
        if (kind == "bpo")
            meta.kind = NodeKind::bpo;
        else if (kind == "individual")
            meta.kind = NodeKind::individual;
        else
            fail(source_name, lineno, "kind must be 'bpo' or 'individual', got '" +
                                          std::string(kind) + "'");
        meta.likes = parse_u64(line.substr(c2 + 1), source_name, lineno, "likes");
        if (meta.id.empty()) fail(source_name, lineno, "empty id");
        rows.push_back(std::move(meta));
    }
    return rows;
}

}  // namespace netlaw
