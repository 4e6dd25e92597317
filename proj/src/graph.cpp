#include "qwalk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

Graph make_graph(int n, std::vector<Edge> edges) {
    for (auto& e : edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g{n, std::move(edges)};
    validate_graph(g);
    return g;
}

void validate_graph(const Graph& g) {
    if (g.n <= 0) throw ParamError("graph node count must be positive");
    Edge prev{-1, -1};
    for (const auto& e : g.edges) {
        if (e.first == e.second) throw ParamError("graph contains a self-loop");
        if (e.first > e.second) throw ParamError("edge endpoints not ordered u < v");
        if (e.first < 0 || e.second >= g.n) throw ParamError("edge endpoint out of range");
        if (!(prev < e)) throw ParamError("edge list not sorted or contains duplicates");
        prev = e;
    }
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

int count_components(const Graph& g) {
    const auto adj = adjacency_lists(g);
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    int components = 0;
    for (int start = 0; start < g.n; ++start) {
        if (seen[start]) continue;
        ++components;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
    }
    return components;
}

bool is_connected(const Graph& g) { return count_components(g) == 1; }

void write_edge_file(const Graph& g, const std::string& path) {
    std::ostringstream out;
    out << "# n=" << g.n << "\n";
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";

    std::ofstream file(path, std::ios::trunc);
    if (!file) throw IoError("cannot open for writing: " + path);
    file << out.str();
    if (!file.flush()) throw IoError("write failed: " + path);
}

Graph read_edge_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open for reading: " + path);

    std::string header;
    if (!std::getline(file, header)) throw IoError("empty graph file: " + path);
    int n = 0;
    if (std::sscanf(header.c_str(), "# n=%d", &n) != 1 || n <= 0)
        throw IoError("malformed graph header (expected '# n=<N>'): " + path);

    std::vector<Edge> edges;
    std::string line;
    while (std::getline(file, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u = -1, v = -1;
        if (!(ls >> u >> v)) throw IoError("malformed edge line '" + line + "' in " + path);
        edges.emplace_back(u, v);
    }
    try {
        return make_graph(n, std::move(edges));
    } catch (const ParamError& e) {
        throw IoError("invalid graph in " + path + ": " + e.what());
    }
}

} // namespace qwalk
