#include "exgraph/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "exgraph/errors.hpp"

namespace exgraph {

Graph::Graph(int order) : order_(order) {
    if (order < 0) throw InputError("graph order must be nonnegative");
    rows_.assign(static_cast<std::size_t>(order), Bitset(order));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loops are not allowed");
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& row : rows_) twice += row.count();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u) {
        rows_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != order_)
        throw InputError("label count must match graph order");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw InputError("duplicate vertex label: " + l);
    labels_ = std::move(labels);
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    return circulant(n, {1});
}

Graph Graph::circulant(int n, const std::vector<int>& steps) {
    if (n < 1) throw InputError("circulant order must be positive");
    Graph g(n);
    std::unordered_set<int> seen;
    for (int s : steps) {
        if (s < 1 || s > n / 2)
            throw InputError("circulant step " + std::to_string(s) + " out of range [1, " +
                             std::to_string(n / 2) + "]");
        if (!seen.insert(s).second)
            throw InputError("duplicate circulant step " + std::to_string(s));
        for (int i = 0; i < n; ++i) {
            int j = (i + s) % n;
            if (i != j) g.add_edge(i, j);
        }
    }
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool same_adjacency(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    for (int v = 0; v < a.order(); ++v)
        if (!(a.neighbors(v) == b.neighbors(v))) return false;
    return true;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) out.add_edge(i, j);
    if (g.has_labels()) out.set_labels(g.labels());
    return out;
}

namespace {

void check_product_order(const Graph& g, const Graph& h, int max_order) {
    const long long n = static_cast<long long>(g.order()) * h.order();
    if (n > max_order)
        throw ResourceError("product order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(max_order));
}

std::vector<std::string> product_labels(const Graph& g, const Graph& h) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(g.order()) * h.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < h.order(); ++j)
            labels.push_back("(" + g.label(i) + ")*(" + h.label(j) + ")");
    return labels;
}

}  // namespace

Graph or_product(const Graph& g, const Graph& h, int max_order) {
    check_product_order(g, h, max_order);
    const int nh = h.order();
    Graph out(g.order() * nh);
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < nh; ++j)
            for (int k = i; k < g.order(); ++k)
                for (int l = (k == i ? j + 1 : 0); l < nh; ++l)
                    if (g.adjacent(i, k) || h.adjacent(j, l))
                        out.add_edge(i * nh + j, k * nh + l);
    if (g.has_labels() && h.has_labels()) out.set_labels(product_labels(g, h));
    return out;
}

Graph strong_product(const Graph& g, const Graph& h, int max_order) {
    check_product_order(g, h, max_order);
    const int nh = h.order();
    Graph out(g.order() * nh);
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < nh; ++j)
            for (int k = i; k < g.order(); ++k)
                for (int l = (k == i ? j + 1 : 0); l < nh; ++l)
                    if ((i == k || g.adjacent(i, k)) && (j == l || h.adjacent(j, l)))
                        out.add_edge(i * nh + j, k * nh + l);
    if (g.has_labels() && h.has_labels()) out.set_labels(product_labels(g, h));
    return out;
}

namespace {

template <typename Product>
Graph iterated_power(const Graph& g, int n, int max_order, Product&& product) {
    if (n < 1) throw InputError("graph power exponent must be >= 1");
    Graph acc = g;
    for (int k = 1; k < n; ++k) acc = product(acc, g, max_order);
    return acc;
}

}  // namespace

Graph or_power(const Graph& g, int n, int max_order) {
    return iterated_power(g, n, max_order,
                          [](const Graph& a, const Graph& b, int cap) { return or_product(a, b, cap); });
}

Graph strong_power(const Graph& g, int n, int max_order) {
    return iterated_power(g, n, max_order, [](const Graph& a, const Graph& b, int cap) {
        return strong_product(a, b, cap);
    });
}

}  // namespace exgraph
