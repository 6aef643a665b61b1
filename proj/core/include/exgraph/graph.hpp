#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exgraph/bitset.hpp"

namespace exgraph {

// Default cap on the order of product graphs. or_power(M4, 3) has 512
// vertices and must be constructible; unbounded powers must fail loudly
// instead of exhausting memory.
inline constexpr int kDefaultProductOrderCap = 1024;

// Finite simple undirected graph with stable 0-based vertex ids.
// Adjacency is stored as one bitset row per vertex. Labels are optional
// display strings; product constructors combine them into tuples so the
// events behind product vertices stay traceable.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    int order() const noexcept { return order_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    const Bitset& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return rows_[static_cast<std::size_t>(v)].count(); }

    int edge_count() const;
    // Pairs (i, j) with i < j, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    void set_labels(std::vector<std::string> labels);
    void clear_labels() { labels_.clear(); }

    // Order, adjacency, and labels all equal.
    bool operator==(const Graph& o) const {
        return order_ == o.order_ && rows_ == o.rows_ && labels_ == o.labels_;
    }

    static Graph edgeless(int n);
    static Graph complete(int n);
    static Graph cycle(int n);
    // Vertex i adjacent to (i +- s) mod n for each step s; steps must be
    // distinct and within [1, n/2].
    static Graph circulant(int n, const std::vector<int>& steps);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

private:
    int order_ = 0;
    std::vector<Bitset> rows_;
    std::vector<std::string> labels_;
};

// Adjacency-only comparison, ignoring labels.
bool same_adjacency(const Graph& a, const Graph& b);

Graph complement(const Graph& g);

// OR (co-normal) product: (g,h) ~ (g',h') iff g ~ g' or h ~ h'.
// Vertex (i, j) of the product gets id i * order(h) + j.
Graph or_product(const Graph& g, const Graph& h, int max_order = kDefaultProductOrderCap);

// Strong product: distinct (g,h) ~ (g',h') iff (g = g' or g ~ g') and
// (h = h' or h ~ h').
Graph strong_product(const Graph& g, const Graph& h, int max_order = kDefaultProductOrderCap);

Graph or_power(const Graph& g, int n, int max_order = kDefaultProductOrderCap);
Graph strong_power(const Graph& g, int n, int max_order = kDefaultProductOrderCap);

}  // namespace exgraph
