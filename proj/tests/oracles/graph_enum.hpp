#pragma once

// Exhaustive enumeration of connected simple graphs on n <= 6 nodes, one
// canonical representative per isomorphism class. Canonical form: minimum
// edge bitmask over all node permutations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "qwalk/graph.hpp"

namespace oracle {

inline std::vector<qwalk::Graph> connected_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int bits = static_cast<int>(pairs.size());

    // pair index lookup
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (int b = 0; b < bits; ++b) {
        pair_index[pairs[b].first][pairs[b].second] = b;
        pair_index[pairs[b].second][pairs[b].first] = b;
    }

    // bit remapping tables, one per permutation
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> remaps;
    do {
        std::vector<int> remap(bits);
        for (int b = 0; b < bits; ++b) remap[b] = pair_index[perm[pairs[b].first]][perm[pairs[b].second]];
        remaps.push_back(std::move(remap));
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto is_connected_mask = [&](std::uint32_t mask) {
        std::uint32_t reached = 1; // start from node 0
        for (;;) {
            std::uint32_t next = reached;
            for (int b = 0; b < bits; ++b) {
                if (!(mask >> b & 1u)) continue;
                const auto [u, v] = pairs[b];
                if (next >> u & 1u) next |= 1u << v;
                if (next >> v & 1u) next |= 1u << u;
            }
            if (next == reached) break;
            reached = next;
        }
        return reached == (1u << n) - 1u;
    };

    std::unordered_set<std::uint32_t> seen;
    std::vector<qwalk::Graph> result;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        if (!is_connected_mask(mask)) continue;
        std::uint32_t canonical = ~0u;
        for (const auto& remap : remaps) {
            std::uint32_t mapped = 0;
            for (int b = 0; b < bits; ++b)
                if (mask >> b & 1u) mapped |= 1u << remap[b];
            canonical = std::min(canonical, mapped);
        }
        if (!seen.insert(canonical).second) continue;
        std::vector<qwalk::Edge> edges;
        for (int b = 0; b < bits; ++b)
            if (canonical >> b & 1u) edges.push_back(pairs[b]);
        result.push_back(qwalk::make_graph(n, std::move(edges)));
    }
    return result;
}

} // namespace oracle
