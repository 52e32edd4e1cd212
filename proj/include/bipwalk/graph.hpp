#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bipwalk {

// Simple undirected graph with 0-based vertex ids. Adjacency lists are kept
// sorted; self-loops and parallel edges are rejected at construction.
class Graph {
  public:
    Graph() = default;

    // Builds a graph from an edge list. Duplicate and reversed pairs collapse
    // to one edge; self-loops throw ValidationError; ids out of [0, n) throw
    // ValidationError.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

  private:
    std::vector<std::vector<int>> adj_;
    long long edge_count_ = 0;
};

// Text format: optional '#' comment lines anywhere, one header line
// "p <n> <m>" where m counts the following edge lines, then m lines "<u> <v>".
// Malformed content throws ParseError with a 1-based line number; self-loop
// lines throw ValidationError.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);
Graph load_graph_string(const std::string& text);

// Writes header comments (each emitted as "# ..."), the "p" line, and the
// deduplicated u < v edge list in sorted order. load_graph(write_graph(g))
// round-trips to an identical graph.
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
void write_graph_file(const std::string& path, const Graph& g, const std::vector<std::string>& comments = {});

}  // namespace bipwalk
