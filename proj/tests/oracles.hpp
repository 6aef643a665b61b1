#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// solver and bitset machinery: adjacency is re-read into a plain bool
// matrix and subsets are enumerated exhaustively.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "exgraph/graph.hpp"

namespace oracle {

inline std::vector<std::vector<bool>> dense_adjacency(const exgraph::Graph& g) {
    const int n = g.order();
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
    return adj;
}

// Exhaustive scan over all 2^n subsets. Guarded: beyond ~20 vertices the
// scan is no longer a usable oracle.
inline int max_subset(const exgraph::Graph& g, bool want_adjacent) {
    const int n = g.order();
    if (n > 20) throw std::logic_error("brute-force oracle limited to 20 vertices");
    const auto adj = dense_adjacency(g);
    int best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint64_t{1} << v)) members.push_back(v);
        bool ok = true;
        for (std::size_t i = 0; i < members.size() && ok; ++i)
            for (std::size_t j = i + 1; j < members.size() && ok; ++j)
                ok = adj[static_cast<std::size_t>(members[i])]
                        [static_cast<std::size_t>(members[j])] == want_adjacent;
        if (ok && static_cast<int>(members.size()) > best)
            best = static_cast<int>(members.size());
    }
    return best;
}

inline int max_clique_size(const exgraph::Graph& g) { return max_subset(g, true); }

inline int max_independent_size(const exgraph::Graph& g) { return max_subset(g, false); }

inline bool pairwise_adjacent(const exgraph::Graph& g, const std::vector<int>& vertices) {
    const auto adj = dense_adjacency(g);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!adj[static_cast<std::size_t>(vertices[i])][static_cast<std::size_t>(vertices[j])])
                return false;
    return true;
}

inline bool pairwise_nonadjacent(const exgraph::Graph& g, const std::vector<int>& vertices) {
    const auto adj = dense_adjacency(g);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adj[static_cast<std::size_t>(vertices[i])][static_cast<std::size_t>(vertices[j])])
                return false;
    return true;
}

inline exgraph::Graph random_graph(std::mt19937& rng, int n, double edge_probability) {
    exgraph::Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < edge_probability) g.add_edge(i, j);
    return g;
}

}  // namespace oracle
