#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

enum class GraphModel { Er, Configuration, CompleteMinusM, Complete, Cycle };

std::string model_name(GraphModel model);
GraphModel model_from_name(const std::string& name);

/// Parameters for one graph realization. Only the fields of the selected
/// model are read; validate() enforces the per-model constraints.
struct GraphModelParams {
    GraphModel model = GraphModel::Er;
    int n = 0;
    double p = -1.0;       // ER connection probability, 0 < p <= 1
    int k = 0;             // Configuration model uniform degree
    long long m = -1;      // CompleteMinusM removed edge count
    std::uint64_t seed = 0;
    bool require_connected = false;

    void validate() const;
};

/// Each node pair (u, v), u < v, visited in lexicographic order and included
/// with probability p. A fixed seed therefore fully determines the graph.
Graph generate_er(int n, double p, Rng& rng);

/// Uniform-degree configuration model via stub matching. Stub pairs that
/// would create a self-loop or duplicate edge are redrawn; a matching that
/// gets stuck is restarted from scratch, up to max_restarts.
/// For k > (n-1)/2 the complement graph is generated and inverted.
Graph generate_configuration(int n, int k, Rng& rng, long long max_restarts = 1000000);

/// Degree-preserving randomization: `swaps` proposals of replacing edges
/// (a,b),(c,d) with (a,d),(c,b); proposals creating a self-loop or duplicate
/// edge are rejected but still count toward `swaps`.
Graph randomize_by_edge_interchange(const Graph& g, long long swaps, Rng& rng);

/// Complete graph with m uniformly chosen edges removed (without replacement).
Graph generate_complete_minus_m(int n, long long m, Rng& rng);

Graph generate_cycle(int n);    // n >= 3
Graph generate_complete(int n); // n >= 2

inline constexpr int kConnectivityResampleCap = 10000;

/// Dispatches on params.model. With require_connected set, resamples until the
/// graph is connected (cap kConnectivityResampleCap); the number of discarded
/// draws is reported through *resamples when non-null.
Graph generate(const GraphModelParams& params, Rng& rng, int* resamples = nullptr);

} // namespace qwalk
