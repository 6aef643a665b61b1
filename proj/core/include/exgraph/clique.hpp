#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "exgraph/graph.hpp"

namespace exgraph {

struct SearchBudget {
    std::chrono::milliseconds limit{60'000};
};

struct CliqueResult {
    int size = 0;
    std::vector<int> witness;  // ascending vertex ids
    bool proven = true;        // false: lower bound only, budget ran out
    std::int64_t nodes = 0;
    double seconds = 0.0;
};

// Exact maximum clique by branch and bound with greedy-coloring upper
// bounds over bitset candidate sets. Deterministic for a fixed graph.
CliqueResult max_clique(const Graph& g, const SearchBudget& budget = {});

// alpha(g) = omega of the complement.
CliqueResult max_independent_set(const Graph& g, const SearchBudget& budget = {});

// Bron-Kerbosch with pivoting; cliques sorted ascending internally and
// the list lexicographically. Throws ResourceError past max_count.
std::vector<std::vector<int>> enumerate_maximal_cliques(const Graph& g,
                                                        std::size_t max_count = 1'000'000);

bool is_clique(const Graph& g, std::span<const int> vertices);
bool is_independent_set(const Graph& g, std::span<const int> vertices);

}  // namespace exgraph
