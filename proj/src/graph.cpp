#include "bipwalk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bipwalk/errors.hpp"

namespace bipwalk {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    Graph g;
    g.adj_.assign(n, {});
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for " + std::to_string(n) + " vertices");
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.edge_count_ = static_cast<long long>(edges.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph load_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    long long edge_lines = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag >> n >> m) || tag != "p" || n < 0 || m < 0)
                throw ParseError("expected header 'p <n> <m>'", line_no);
            std::string rest;
            if (ls >> rest) throw ParseError("trailing tokens after header", line_no);
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError("expected '<u> <v>'", line_no);
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens after edge", line_no);
        ++edge_lines;
        if (edge_lines > m) throw ParseError("more edge lines than the header announced", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range [0, " + std::to_string(n) + ")", line_no);
        if (u == v) throw ValidationError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw ParseError("missing header 'p <n> <m>'", line_no);
    if (edge_lines != m)
        throw ParseError("header announced " + std::to_string(m) + " edges, found " + std::to_string(edge_lines),
                         line_no);
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    return load_graph(in);
}

Graph load_graph_string(const std::string& text) {
    std::istringstream in(text);
    return load_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_graph_file(const std::string& path, const Graph& g, const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open " + path + " for writing");
    write_graph(out, g, comments);
}

}  // namespace bipwalk
