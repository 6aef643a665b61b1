#include "exgraph/clique.hpp"

#include <algorithm>
#include <numeric>

#include "exgraph/errors.hpp"

namespace exgraph {

namespace {

using Clock = std::chrono::steady_clock;

// Branch and bound in a relabeled vertex space. Vertices are renumbered
// along the reverse degeneracy order so that dense parts of the graph
// get small indices and are colored first.
class MaxCliqueSearch {
public:
    MaxCliqueSearch(const Graph& g, const SearchBudget& budget)
        : n_(g.order()), deadline_(Clock::now() + budget.limit) {
        const auto order = degeneracy_order(g);
        old_of_new_.assign(static_cast<std::size_t>(n_), 0);
        std::vector<int> new_of_old(static_cast<std::size_t>(n_), 0);
        for (int k = 0; k < n_; ++k) {
            // last removed -> index 0
            const int old = order[static_cast<std::size_t>(n_ - 1 - k)];
            old_of_new_[static_cast<std::size_t>(k)] = old;
            new_of_old[static_cast<std::size_t>(old)] = k;
        }
        adj_.assign(static_cast<std::size_t>(n_), Bitset(n_));
        for (int u = 0; u < n_; ++u)
            g.neighbors(u).for_each([&](int v) {
                adj_[static_cast<std::size_t>(new_of_old[static_cast<std::size_t>(u)])].set(
                    new_of_old[static_cast<std::size_t>(v)]);
            });
    }

    CliqueResult run() {
        const auto start = Clock::now();
        CliqueResult result;

        greedy_seed();

        if (n_ > 0) {
            Bitset all(n_);
            for (int v = 0; v < n_; ++v) all.set(v);
            std::vector<int> current;
            expand(all, current);
        }

        result.size = static_cast<int>(best_.size());
        result.witness.reserve(best_.size());
        for (int v : best_) result.witness.push_back(old_of_new_[static_cast<std::size_t>(v)]);
        std::sort(result.witness.begin(), result.witness.end());
        result.proven = !out_of_budget_;
        result.nodes = nodes_;
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return result;
    }

private:
    static std::vector<int> degeneracy_order(const Graph& g) {
        const int n = g.order();
        std::vector<int> deg(static_cast<std::size_t>(n));
        std::vector<bool> removed(static_cast<std::size_t>(n), false);
        for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(n));
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v)
                if (!removed[static_cast<std::size_t>(v)] &&
                    (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
                    best = v;
            removed[static_cast<std::size_t>(best)] = true;
            order.push_back(best);
            g.neighbors(best).for_each([&](int u) {
                if (!removed[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
            });
        }
        return order;
    }

    // Deterministic greedy clique from every start vertex; a good initial
    // incumbent lets the color bound prune early.
    void greedy_seed() {
        for (int s = 0; s < n_; ++s) {
            std::vector<int> clique{s};
            Bitset cand = adj_[static_cast<std::size_t>(s)];
            while (cand.any()) {
                int pick = -1, pick_deg = -1;
                cand.for_each([&](int v) {
                    const int d = (cand & adj_[static_cast<std::size_t>(v)]).count();
                    if (d > pick_deg) {
                        pick_deg = d;
                        pick = v;
                    }
                });
                clique.push_back(pick);
                cand &= adj_[static_cast<std::size_t>(pick)];
            }
            if (clique.size() > best_.size()) best_ = clique;
        }
    }

    // Greedy sequential coloring of P; returns vertices grouped by color
    // class, colors ascending.
    void color_sort(const Bitset& p, std::vector<int>& verts, std::vector<int>& colors) const {
        verts.clear();
        colors.clear();
        Bitset uncolored = p;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset q = uncolored;
            while (true) {
                const int v = q.first();
                if (v < 0) break;
                verts.push_back(v);
                colors.push_back(color);
                uncolored.reset(v);
                q.reset(v);
                q.subtract(adj_[static_cast<std::size_t>(v)]);
            }
        }
    }

    void expand(Bitset p, std::vector<int>& current) {
        if (out_of_budget_) return;
        if ((++nodes_ & 0x3FF) == 0 && Clock::now() > deadline_) {
            out_of_budget_ = true;
            return;
        }

        std::vector<int> verts, colors;
        color_sort(p, verts, colors);

        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (current.size() + static_cast<std::size_t>(colors[static_cast<std::size_t>(i)]) <=
                best_.size())
                return;  // colors ascend, so everything earlier is bounded too
            const int v = verts[static_cast<std::size_t>(i)];
            current.push_back(v);
            Bitset next = p & adj_[static_cast<std::size_t>(v)];
            if (next.any()) {
                expand(next, current);
            } else if (current.size() > best_.size()) {
                best_ = current;
            }
            current.pop_back();
            if (out_of_budget_) return;
            p.reset(v);
        }
    }

    int n_;
    Clock::time_point deadline_;
    std::vector<Bitset> adj_;
    std::vector<int> old_of_new_;
    std::vector<int> best_;
    std::int64_t nodes_ = 0;
    bool out_of_budget_ = false;
};

}  // namespace

CliqueResult max_clique(const Graph& g, const SearchBudget& budget) {
    return MaxCliqueSearch(g, budget).run();
}

CliqueResult max_independent_set(const Graph& g, const SearchBudget& budget) {
    return max_clique(complement(g), budget);
}

namespace {

class BronKerbosch {
public:
    BronKerbosch(const Graph& g, std::size_t max_count) : g_(g), max_count_(max_count) {}

    std::vector<std::vector<int>> run() {
        const int n = g_.order();
        Bitset p(n), x(n);
        for (int v = 0; v < n; ++v) p.set(v);
        std::vector<int> r;
        recurse(r, p, x);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    void recurse(std::vector<int>& r, Bitset p, Bitset x) {
        if (p.none() && x.none()) {
            auto clique = r;
            std::sort(clique.begin(), clique.end());
            out_.push_back(std::move(clique));
            if (out_.size() > max_count_)
                throw ResourceError("maximal clique count exceeds cap " +
                                    std::to_string(max_count_));
            return;
        }
        // Tomita pivot: minimize branching into P \ N(pivot).
        int pivot = -1, pivot_links = -1;
        auto consider = [&](int u) {
            const int links = (p & g_.neighbors(u)).count();
            if (links > pivot_links) {
                pivot_links = links;
                pivot = u;
            }
        };
        p.for_each(consider);
        x.for_each(consider);

        Bitset branch = p;
        branch.subtract(g_.neighbors(pivot));
        std::vector<int> order = branch.to_vector();
        for (int v : order) {
            r.push_back(v);
            recurse(r, p & g_.neighbors(v), x & g_.neighbors(v));
            r.pop_back();
            p.reset(v);
            x.set(v);
        }
    }

    const Graph& g_;
    std::size_t max_count_;
    std::vector<std::vector<int>> out_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_maximal_cliques(const Graph& g, std::size_t max_count) {
    if (g.order() == 0) return {};
    return BronKerbosch(g, max_count).run();
}

bool is_clique(const Graph& g, std::span<const int> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

bool is_independent_set(const Graph& g, std::span<const int> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

}  // namespace exgraph
