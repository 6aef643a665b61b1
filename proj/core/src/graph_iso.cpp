#include "exgraph/graph_iso.hpp"

#include <algorithm>
#include <numeric>

#include "exgraph/errors.hpp"

namespace exgraph {

namespace {

void check_order_cap(const Graph& g, int cap, const char* what) {
    if (g.order() > cap)
        throw ResourceError(std::string(what) + ": order " + std::to_string(g.order()) +
                            " exceeds cap " + std::to_string(cap));
}

// Cheap per-vertex invariant: (degree, triangle count, sorted neighbor degrees).
struct VertexInvariant {
    int degree = 0;
    int triangles = 0;
    std::vector<int> neighbor_degrees;

    auto tie() const { return std::tie(degree, triangles, neighbor_degrees); }
    bool operator==(const VertexInvariant& o) const { return tie() == o.tie(); }
    bool operator<(const VertexInvariant& o) const { return tie() < o.tie(); }
};

std::vector<VertexInvariant> vertex_invariants(const Graph& g) {
    std::vector<VertexInvariant> inv(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        auto& iv = inv[static_cast<std::size_t>(v)];
        iv.degree = g.degree(v);
        g.neighbors(v).for_each([&](int u) {
            iv.neighbor_degrees.push_back(g.degree(u));
            iv.triangles += (g.neighbors(v) & g.neighbors(u)).count();
        });
        iv.triangles /= 2;
        std::sort(iv.neighbor_degrees.begin(), iv.neighbor_degrees.end());
    }
    return inv;
}

// Backtracking search for an adjacency-preserving bijection g -> h.
// `pinned` pre-assigns images (used for automorphism orbit queries).
class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {}

    std::optional<std::vector<int>> run(const std::vector<std::pair<int, int>>& pinned) {
        const int n = g_.order();
        if (n != h_.order() || g_.edge_count() != h_.edge_count()) return std::nullopt;

        inv_g_ = vertex_invariants(g_);
        inv_h_ = vertex_invariants(h_);
        {
            auto a = inv_g_;
            auto b = inv_h_;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) return std::nullopt;
        }

        mapping_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), false);
        for (auto [u, v] : pinned) {
            if (!(inv_g_[static_cast<std::size_t>(u)] == inv_h_[static_cast<std::size_t>(v)]))
                return std::nullopt;
            mapping_[static_cast<std::size_t>(u)] = v;
            used_[static_cast<std::size_t>(v)] = true;
        }

        order_ = search_order(pinned);
        if (extend(0)) return mapping_;
        return std::nullopt;
    }

private:
    // Pinned vertices first, then greedily the vertex with the most
    // already-ordered neighbors (ties: higher degree, then lower index).
    std::vector<int> search_order(const std::vector<std::pair<int, int>>& pinned) const {
        const int n = g_.order();
        std::vector<int> order;
        std::vector<bool> placed(static_cast<std::size_t>(n), false);
        for (auto [u, v] : pinned) {
            (void)v;
            if (!placed[static_cast<std::size_t>(u)]) {
                order.push_back(u);
                placed[static_cast<std::size_t>(u)] = true;
            }
        }
        while (static_cast<int>(order.size()) < n) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int links = 0;
                for (int u : order)
                    if (g_.adjacent(v, u)) ++links;
                const int deg = g_.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            placed[static_cast<std::size_t>(best)] = true;
        }
        return order;
    }

    bool extend(std::size_t depth) {
        while (depth < order_.size() && mapping_[static_cast<std::size_t>(order_[depth])] >= 0)
            ++depth;
        if (depth == order_.size()) return true;

        const int u = order_[depth];
        for (int w = 0; w < h_.order(); ++w) {
            if (used_[static_cast<std::size_t>(w)]) continue;
            if (!(inv_g_[static_cast<std::size_t>(u)] == inv_h_[static_cast<std::size_t>(w)]))
                continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const int p = order_[d];
                const int q = mapping_[static_cast<std::size_t>(p)];
                if (g_.adjacent(u, p) != h_.adjacent(w, q)) ok = false;
            }
            if (!ok) continue;
            mapping_[static_cast<std::size_t>(u)] = w;
            used_[static_cast<std::size_t>(w)] = true;
            if (extend(depth + 1)) return true;
            mapping_[static_cast<std::size_t>(u)] = -1;
            used_[static_cast<std::size_t>(w)] = false;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<VertexInvariant> inv_g_, inv_h_;
    std::vector<int> order_;
    std::vector<int> mapping_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h, int order_cap) {
    check_order_cap(g, order_cap, "isomorphism");
    check_order_cap(h, order_cap, "isomorphism");
    return IsoSearch(g, h).run({});
}

bool is_isomorphic(const Graph& g, const Graph& h, int order_cap) {
    return find_isomorphism(g, h, order_cap).has_value();
}

bool witness_is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& mapping) {
    const int n = g.order();
    if (h.order() != n || static_cast<int>(mapping.size()) != n) return false;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : mapping) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) !=
                h.adjacent(mapping[static_cast<std::size_t>(i)], mapping[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

OrbitPartition automorphism_orbits(const Graph& g, int order_cap) {
    check_order_cap(g, order_cap, "automorphism orbits");
    const int n = g.order();

    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
    };

    // Merge orbits with every automorphism found; query pairs that are
    // still separate.
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (find(u) == find(v)) continue;
            auto aut = IsoSearch(g, g).run({{u, v}});
            if (aut) {
                for (int i = 0; i < n; ++i) unite(i, (*aut)[static_cast<std::size_t>(i)]);
            }
        }
    }

    OrbitPartition part;
    part.orbit_of.resize(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int rep = find(v);
        part.orbit_of[static_cast<std::size_t>(v)] = rep;
        buckets[static_cast<std::size_t>(rep)].push_back(v);
    }
    for (auto& b : buckets)
        if (!b.empty()) part.orbits.push_back(std::move(b));
    return part;
}

bool is_vertex_transitive(const Graph& g, int order_cap) {
    check_order_cap(g, order_cap, "vertex transitivity");
    if (g.order() <= 1) return true;
    // All degrees equal is necessary; skip the orbit search when it fails.
    const int d0 = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d0) return false;
    return automorphism_orbits(g, order_cap).single_orbit();
}

bool is_self_complementary(const Graph& g, int order_cap) {
    check_order_cap(g, order_cap, "self-complementarity");
    const long long pairs = static_cast<long long>(g.order()) * (g.order() - 1) / 2;
    if (2LL * g.edge_count() != pairs) return false;
    return is_isomorphic(g, complement(g), order_cap);
}

namespace {

// Induced subgraph on `subset` is a single k-cycle: all induced degrees 2
// and one closed walk covering the subset.
bool induces_cycle(const Graph& g, const std::vector<int>& subset) {
    const int k = static_cast<int>(subset.size());
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(subset[static_cast<std::size_t>(a)], subset[static_cast<std::size_t>(b)])) {
                nbr[static_cast<std::size_t>(a)].push_back(b);
                nbr[static_cast<std::size_t>(b)].push_back(a);
            }
    for (const auto& ns : nbr)
        if (ns.size() != 2) return false;
    int prev = 0, cur = nbr[0][0], steps = 1;
    while (cur != 0) {
        const auto& ns = nbr[static_cast<std::size_t>(cur)];
        const int nxt = (ns[0] == prev) ? ns[1] : ns[0];
        prev = cur;
        cur = nxt;
        ++steps;
    }
    return steps == k;
}

}  // namespace

std::vector<std::vector<int>> induced_cycles(const Graph& g, int k, int order_cap) {
    check_order_cap(g, order_cap, "induced cycles");
    if (k < 3) throw InputError("induced cycle length must be >= 3");

    std::vector<std::vector<int>> out;
    const int n = g.order();
    if (k > n) return out;

    std::vector<int> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        if (induces_cycle(g, subset)) out.push_back(subset);
        // next k-combination of {0..n-1} in lexicographic order
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace exgraph
