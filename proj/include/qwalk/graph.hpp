#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qwalk {

/// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

/// Simple undirected graph: node count plus a sorted, duplicate-free edge list.
/// No self-loops, endpoints in [0, n).
struct Graph {
    int n = 0;
    std::vector<Edge> edges; // each (u, v) with u < v, lexicographically sorted

    int edge_count() const { return static_cast<int>(edges.size()); }
    double average_degree() const { return n > 0 ? 2.0 * static_cast<double>(edges.size()) / n : 0.0; }
    std::vector<int> degrees() const;
};

/// Normalizes (orders endpoints, sorts, dedups) and validates the edge list.
Graph make_graph(int n, std::vector<Edge> edges);

/// Throws ParamError if any Graph invariant is violated.
void validate_graph(const Graph& g);

std::vector<std::vector<int>> adjacency_lists(const Graph& g);
int count_components(const Graph& g);
bool is_connected(const Graph& g);

/// Text format: first line "# n=<N>", then one "u v" line per edge, u < v,
/// lexicographically sorted.
void write_edge_file(const Graph& g, const std::string& path);
Graph read_edge_file(const std::string& path);

} // namespace qwalk
