#include "qwalk/graph_gen.hpp"

#include <algorithm>
#include <optional>

#include "qwalk/errors.hpp"

namespace qwalk {

std::string model_name(GraphModel model) {
    switch (model) {
        case GraphModel::Er: return "er";
        case GraphModel::Configuration: return "config";
        case GraphModel::CompleteMinusM: return "complete-minus-m";
        case GraphModel::Complete: return "complete";
        case GraphModel::Cycle: return "cycle";
    }
    throw ParamError("unknown graph model");
}

GraphModel model_from_name(const std::string& name) {
    if (name == "er") return GraphModel::Er;
    if (name == "config") return GraphModel::Configuration;
    if (name == "complete-minus-m") return GraphModel::CompleteMinusM;
    if (name == "complete") return GraphModel::Complete;
    if (name == "cycle") return GraphModel::Cycle;
    throw ParamError("unknown graph model '" + name + "'");
}

void GraphModelParams::validate() const {
    if (n < 2) throw ParamError("node count must be at least 2");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    switch (model) {
        case GraphModel::Er:
            if (!(p > 0.0 && p <= 1.0)) throw ParamError("er model requires 0 < p <= 1");
            break;
        case GraphModel::Configuration:
            if (k <= 0 || k >= n) throw ParamError("configuration model requires 0 < k < n");
            if ((static_cast<long long>(n) * k) % 2 != 0) throw ParamError("n*k must be even");
            break;
        case GraphModel::CompleteMinusM:
            if (m < 0 || m > max_edges) throw ParamError("m must be in [0, n(n-1)/2]");
            break;
        case GraphModel::Complete:
            break;
        case GraphModel::Cycle:
            if (n < 3) throw ParamError("cycle requires n >= 3");
            break;
    }
}

Graph generate_er(int n, double p, Rng& rng) {
    if (n < 2) throw ParamError("er model requires n >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw ParamError("er probability must be in [0, 1]");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.uniform() < p) edges.emplace_back(u, v);
        }
    }
    return Graph{n, std::move(edges)};
}

namespace {

// One stub-matching attempt. Stubs are paired in shuffled rounds; pairs that
// would create a self-loop or duplicate edge are thrown back for the next
// round. Returns nullopt on a dead end (leftover stubs admit no legal pair).
std::optional<std::vector<Edge>> try_stub_matching(int n, int k, Rng& rng) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) stubs.push_back(i);

    std::vector<char> adj(static_cast<size_t>(n) * n, 0);
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);

    std::vector<int> leftover;
    while (!stubs.empty()) {
        for (size_t i = stubs.size() - 1; i > 0; --i) {
            const size_t j = rng.below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        leftover.clear();
        bool progress = false;
        for (size_t t = 0; t + 1 < stubs.size(); t += 2) {
            const int u = stubs[t];
            const int v = stubs[t + 1];
            if (u == v || adj[static_cast<size_t>(u) * n + v]) {
                leftover.push_back(u);
                leftover.push_back(v);
                continue;
            }
            adj[static_cast<size_t>(u) * n + v] = 1;
            adj[static_cast<size_t>(v) * n + u] = 1;
            edges.emplace_back(std::min(u, v), std::max(u, v));
            progress = true;
        }
        if (!progress) {
            std::vector<int> nodes(leftover);
            std::sort(nodes.begin(), nodes.end());
            nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
            bool suitable = false;
            for (size_t a = 0; a < nodes.size() && !suitable; ++a)
                for (size_t b = a + 1; b < nodes.size() && !suitable; ++b)
                    if (!adj[static_cast<size_t>(nodes[a]) * n + nodes[b]]) suitable = true;
            if (!suitable) return std::nullopt;
        }
        std::swap(stubs, leftover);
    }
    return edges;
}

Graph complement_graph(const Graph& g) {
    std::vector<char> adj(static_cast<size_t>(g.n) * g.n, 0);
    for (const auto& [u, v] : g.edges) {
        adj[static_cast<size_t>(u) * g.n + v] = 1;
        adj[static_cast<size_t>(v) * g.n + u] = 1;
    }
    std::vector<Edge> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!adj[static_cast<size_t>(u) * g.n + v]) edges.emplace_back(u, v);
    return Graph{g.n, std::move(edges)};
}

} // namespace

Graph generate_configuration(int n, int k, Rng& rng, long long max_restarts) {
    if (n < 2) throw ParamError("configuration model requires n >= 2");
    if (k <= 0 || k >= n) throw ParamError("configuration model requires 0 < k < n");
    if ((static_cast<long long>(n) * k) % 2 != 0) throw ParamError("n*k must be even");

    // Matching the sparser of (graph, complement) keeps conflicts rare; the
    // complement of a uniform (n-1-k)-regular sample is a uniform k-regular one.
    const bool complemented = 2 * k > n - 1;
    const int target_k = complemented ? n - 1 - k : k;

    std::vector<Edge> edges;
    if (target_k > 0) {
        long long attempts = 0;
        std::optional<std::vector<Edge>> result;
        while (!(result = try_stub_matching(n, target_k, rng))) {
            if (++attempts >= max_restarts)
                throw GenerationError("configuration model stub matching failed after " +
                                          std::to_string(attempts) + " restarts (n=" + std::to_string(n) +
                                          ", k=" + std::to_string(k) + ")",
                                      attempts);
        }
        edges = std::move(*result);
    }

    std::sort(edges.begin(), edges.end());
    Graph g{n, std::move(edges)};
    return complemented ? complement_graph(g) : g;
}

Graph randomize_by_edge_interchange(const Graph& g, long long swaps, Rng& rng) {
    if (swaps < 0) throw ParamError("swap count must be nonnegative");
    validate_graph(g);

    std::vector<Edge> edges = g.edges;
    const size_t edge_total = edges.size();
    if (edge_total < 2 || swaps == 0) return g;

    const int n = g.n;
    std::vector<char> adj(static_cast<size_t>(n) * n, 0);
    for (const auto& [u, v] : edges) {
        adj[static_cast<size_t>(u) * n + v] = 1;
        adj[static_cast<size_t>(v) * n + u] = 1;
    }
    auto connected = [&](int u, int v) { return adj[static_cast<size_t>(u) * n + v] != 0; };
    auto set_adj = [&](int u, int v, char value) {
        adj[static_cast<size_t>(u) * n + v] = value;
        adj[static_cast<size_t>(v) * n + u] = value;
    };

    for (long long s = 0; s < swaps; ++s) {
        const size_t i = rng.below(edge_total);
        size_t j = rng.below(edge_total - 1);
        if (j >= i) ++j;
        auto [a, b] = edges[i];
        auto [c, d] = edges[j];
        if (rng.next() & 1u) std::swap(c, d);
        // candidate replacement: (a,d) and (c,b)
        if (a == d || c == b) continue;
        if (connected(a, d) || connected(c, b)) continue;
        set_adj(a, b, 0);
        set_adj(c, d, 0);
        set_adj(a, d, 1);
        set_adj(c, b, 1);
        edges[i] = {std::min(a, d), std::max(a, d)};
        edges[j] = {std::min(c, b), std::max(c, b)};
    }
    std::sort(edges.begin(), edges.end());
    return Graph{n, std::move(edges)};
}

Graph generate_complete_minus_m(int n, long long m, Rng& rng) {
    if (n < 2) throw ParamError("complete-minus-m requires n >= 2");
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > total) throw ParamError("m must be in [0, n(n-1)/2]");

    std::vector<Edge> pairs;
    pairs.reserve(total);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    // partial Fisher-Yates: the first m slots become the removed edges
    for (long long i = 0; i < m; ++i) {
        const long long j = i + static_cast<long long>(rng.below(total - i));
        std::swap(pairs[i], pairs[j]);
    }
    std::vector<Edge> edges(pairs.begin() + m, pairs.end());
    std::sort(edges.begin(), edges.end());
    return Graph{n, std::move(edges)};
}

Graph generate_cycle(int n) {
    if (n < 3) throw ParamError("cycle requires n >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    std::sort(edges.begin(), edges.end());
    return Graph{n, std::move(edges)};
}

Graph generate_complete(int n) {
    if (n < 2) throw ParamError("complete graph requires n >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph{n, std::move(edges)};
}

Graph generate(const GraphModelParams& params, Rng& rng, int* resamples) {
    params.validate();
    auto draw = [&]() -> Graph {
        switch (params.model) {
            case GraphModel::Er: return generate_er(params.n, params.p, rng);
            case GraphModel::Configuration: return generate_configuration(params.n, params.k, rng);
            case GraphModel::CompleteMinusM: return generate_complete_minus_m(params.n, params.m, rng);
            case GraphModel::Complete: return generate_complete(params.n);
            case GraphModel::Cycle: return generate_cycle(params.n);
        }
        throw ParamError("unknown graph model");
    };

    int discarded = 0;
    for (;;) {
        Graph g = draw();
        if (!params.require_connected || is_connected(g)) {
            if (resamples) *resamples = discarded;
            return g;
        }
        if (++discarded > kConnectivityResampleCap)
            throw GenerationError("no connected graph after " + std::to_string(discarded) + " draws",
                                  discarded);
    }
}

} // namespace qwalk
