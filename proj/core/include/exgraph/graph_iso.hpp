#pragma once

#include <optional>
#include <vector>

#include "exgraph/graph.hpp"

namespace exgraph {

// Backtracking isomorphism is only ever invoked on small graphs (the
// named circulants and their complements); product graphs never
// need it.
inline constexpr int kDefaultIsoOrderCap = 32;

// mapping[v in g] = image in h. Valid iff it is a bijection preserving
// adjacency and non-adjacency; see witness_is_isomorphism.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                 int order_cap = kDefaultIsoOrderCap);

bool is_isomorphic(const Graph& g, const Graph& h, int order_cap = kDefaultIsoOrderCap);

// Exhaustive edge scan over all vertex pairs; independent of the search.
bool witness_is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& mapping);

struct OrbitPartition {
    // orbit_of[v] = smallest vertex in v's automorphism orbit.
    std::vector<int> orbit_of;
    // Orbits sorted by representative; vertices ascending within each.
    std::vector<std::vector<int>> orbits;

    bool single_orbit() const { return orbits.size() <= 1; }
};

OrbitPartition automorphism_orbits(const Graph& g, int order_cap = kDefaultIsoOrderCap);

bool is_vertex_transitive(const Graph& g, int order_cap = kDefaultIsoOrderCap);

bool is_self_complementary(const Graph& g, int order_cap = kDefaultIsoOrderCap);

// All vertex k-sets whose induced subgraph is a k-cycle, in lexicographic
// order. k >= 3.
std::vector<std::vector<int>> induced_cycles(const Graph& g, int k,
                                             int order_cap = kDefaultIsoOrderCap);

}  // namespace exgraph
