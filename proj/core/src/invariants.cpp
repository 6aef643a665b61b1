#include "exgraph/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "exgraph/errors.hpp"

namespace exgraph {

namespace {

// Memoized solver results keyed by the canonical graph encoding.
// Solvers are deterministic, so cached and fresh results are identical.
struct InvariantCache {
    std::mutex mutex;
    std::map<std::string, double> theta;
    std::map<std::string, CliqueResult> clique;
    std::map<std::string, Rational> packing;

    static InvariantCache& instance() {
        static InvariantCache cache;
        return cache;
    }
};

std::string graph_key(const Graph& g) {
    std::ostringstream os;
    os << g.order();
    for (auto [u, v] : g.edges()) os << ' ' << u << ':' << v;
    return os.str();
}

template <typename T, typename Compute>
T cached(std::map<std::string, T> InvariantCache::* table, const Graph& g, bool use_cache,
         Compute&& compute) {
    if (!use_cache) return compute();
    const std::string key = graph_key(g);
    auto& cache = InvariantCache::instance();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = (cache.*table).find(key);
        if (it != (cache.*table).end()) return it->second;
    }
    T value = compute();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        (cache.*table).emplace(key, value);
    }
    return value;
}

CliqueResult cached_max_clique(const Graph& g, const SolveOptions& options) {
    auto result = cached(&InvariantCache::clique, g, options.use_cache,
                         [&] { return max_clique(g, options.budget); });
    // Never serve an unproven bound from the cache as if it were exact;
    // recompute when a previous run timed out.
    if (!result.proven && options.use_cache) {
        result = max_clique(g, options.budget);
        if (result.proven) {
            auto& cache = InvariantCache::instance();
            std::lock_guard<std::mutex> lock(cache.mutex);
            cache.clique[graph_key(g)] = result;
        }
    }
    return result;
}

}  // namespace

void clear_invariant_cache() {
    auto& cache = InvariantCache::instance();
    std::lock_guard<std::mutex> lock(cache.mutex);
    cache.theta.clear();
    cache.clique.clear();
    cache.packing.clear();
}

Rational alpha(const Graph& g, const SolveOptions& options) {
    const auto result = cached_max_clique(complement(g), options);
    if (!result.proven)
        throw ResourceError("independence-number search exhausted its budget");
    return Rational(result.size);
}

long omega(const Graph& g, const SolveOptions& options) {
    const auto result = cached_max_clique(g, options);
    if (!result.proven) throw ResourceError("clique search exhausted its budget");
    return result.size;
}

double lovasz_theta(const Graph& g, const SolveOptions& options) {
    return cached(&InvariantCache::theta, g, options.use_cache,
                  [&] { return sdp_theta(g, options.theta).value; });
}

Rational alpha_star(const Graph& g, const SolveOptions& options) {
    return cached(&InvariantCache::packing, g, options.use_cache, [&] {
        const int n = g.order();
        std::vector<LinearConstraint> constraints;
        for (const auto& clique : enumerate_maximal_cliques(g)) {
            LinearConstraint c;
            for (int v : clique) c.terms.emplace_back(v, Rational(1));
            c.sense = ConstraintSense::LessEq;
            c.rhs = Rational(1);
            constraints.push_back(std::move(c));
        }
        const auto lp =
            lp_maximize(n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)),
                        constraints);
        if (lp.status != LpStatus::Optimal)
            throw NumericalError("alpha* LP did not solve", 0.0, 0.0);
        return lp.value;
    });
}

BoundTriple bound_triple(const Graph& g, const SolveOptions& options) {
    BoundTriple triple;
    const auto independent = cached_max_clique(complement(g), options);
    triple.classical = Rational(independent.size);
    triple.proven = independent.proven;
    triple.quantum = lovasz_theta(g, options);
    triple.exclusivity = alpha_star(g, options);
    return triple;
}

BoundTriple bound_triple(const Scenario& s, const SolveOptions& options) {
    return bound_triple(s.exclusivity_graph(), options);
}

Rational vt_alpha_star(const Graph& g, const SolveOptions& options) {
    if (!is_vertex_transitive(g, options.iso_order_cap))
        throw InputError("vt_alpha_star requires a vertex-transitive graph");
    return Rational(g.order()) / Rational(omega(g, options));
}

CopyBound ge_copy_bound(const Graph& g, int copies, const SolveOptions& options) {
    if (copies < 1) throw InputError("copy count must be >= 1");
    CopyBound out;
    out.copies = copies;
    const Graph power = or_power(g, copies, options.product_order_cap);
    out.omega_power = cached_max_clique(power, options);
    out.max_event_probability =
        std::pow(static_cast<double>(out.omega_power.size), -1.0 / copies);
    out.bound = g.order() * out.max_event_probability;
    return out;
}

CapacityBounds shannon_bounds(const Graph& g, int max_power, const SolveOptions& options) {
    if (max_power < 1) throw InputError("max power must be >= 1");
    CapacityBounds out;
    out.upper = lovasz_theta(g, options);
    out.lower = 0.0;
    for (int k = 1; k <= max_power; ++k) {
        PowerIndependence entry;
        entry.power = k;
        const Graph power = strong_power(g, k, options.product_order_cap);
        entry.independent_set = cached_max_clique(complement(power), options);
        // Only proven values may tighten the lower bound.
        if (entry.independent_set.proven)
            out.lower = std::max(
                out.lower, std::pow(static_cast<double>(entry.independent_set.size), 1.0 / k));
        out.per_power.push_back(std::move(entry));
    }
    return out;
}

UniquenessProbe uniqueness_probe(const Graph& g, const SolveOptions& options) {
    const int n = g.order();
    UniquenessProbe out;
    out.optimum = alpha_star(g, options);

    std::vector<LinearConstraint> constraints;
    for (const auto& clique : enumerate_maximal_cliques(g)) {
        LinearConstraint c;
        for (int v : clique) c.terms.emplace_back(v, Rational(1));
        c.sense = ConstraintSense::LessEq;
        c.rhs = Rational(1);
        constraints.push_back(std::move(c));
    }
    {
        LinearConstraint total;
        for (int v = 0; v < n; ++v) total.terms.emplace_back(v, Rational(1));
        total.sense = ConstraintSense::Equal;
        total.rhs = out.optimum;
        constraints.push_back(std::move(total));
    }

    out.unique = true;
    for (int v = 0; v < n; ++v) {
        std::vector<Rational> objective(static_cast<std::size_t>(n), Rational(0));
        objective[static_cast<std::size_t>(v)] = Rational(1);
        const auto hi = lp_maximize(n, objective, constraints);
        objective[static_cast<std::size_t>(v)] = Rational(-1);
        const auto lo = lp_maximize(n, objective, constraints);
        if (hi.status != LpStatus::Optimal || lo.status != LpStatus::Optimal)
            throw NumericalError("uniqueness probe LP did not solve", 0.0, 0.0);
        const Rational vmax = hi.value;
        const Rational vmin = -lo.value;
        out.ranges.emplace_back(vmin, vmax);
        if (vmin != vmax) {
            // One free vertex settles the verdict; the recorded range is
            // the witness.
            out.unique = false;
            break;
        }
    }
    if (out.unique) {
        out.forced.reserve(static_cast<std::size_t>(n));
        for (const auto& [lo, hi] : out.ranges) out.forced.push_back(lo);
    }
    return out;
}

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_prime_square(long n) {
    const long r = std::lround(std::sqrt(static_cast<double>(n)));
    for (long p = std::max(0L, r - 1); p <= r + 1; ++p)
        if (p * p == n && is_prime(p)) return true;
    return false;
}

bool relatively_close(double value, double target, double tol) {
    return std::abs(value - target) <= tol * std::max(1.0, std::abs(target));
}

}  // namespace

Result2Check result2_check(const Graph& g, const SolveOptions& options) {
    Result2Check out;
    out.self_complementary = is_self_complementary(g, options.iso_order_cap);
    out.vertex_transitive = is_vertex_transitive(g, options.iso_order_cap);
    out.order_not_prime_square = !is_prime_square(g.order());

    out.independence = alpha(g, options);
    out.theta = lovasz_theta(g, options);
    const double sqrt_order = std::sqrt(static_cast<double>(g.order()));
    out.alpha_below_theta =
        out.independence.to_double() < out.theta - options.tolerance;
    out.theta_is_sqrt_order = relatively_close(out.theta, sqrt_order, options.tolerance);

    out.two_copy = ge_copy_bound(g, 2, options);
    out.proven = out.two_copy.omega_power.proven;
    out.two_copy_matches_sqrt = relatively_close(out.two_copy.bound, sqrt_order, options.tolerance);

    out.pass = out.self_complementary && out.vertex_transitive && out.order_not_prime_square &&
               out.alpha_below_theta && out.theta_is_sqrt_order && out.two_copy_matches_sqrt &&
               out.proven;
    return out;
}

std::vector<CirculantClass> enumerate_scvt_circulants(int n, const SolveOptions& options) {
    if (n < 1 || n > 20) throw InputError("circulant enumeration supports 1 <= n <= 20");

    // A self-complementary graph has n(n-1)/4 edges; skip orders where
    // that is not an integer.
    std::vector<std::vector<int>> hits;
    if ((static_cast<long>(n) * (n - 1)) % 4 == 0) {
        const int max_step = n / 2;
        for (int mask = 1; mask < (1 << max_step); ++mask) {
            std::vector<int> steps;
            for (int s = 1; s <= max_step; ++s)
                if (mask & (1 << (s - 1))) steps.push_back(s);
            const Graph g = Graph::circulant(n, steps);
            if (is_self_complementary(g, options.iso_order_cap)) hits.push_back(steps);
        }
        if (n == 1) hits.push_back({});  // K1 is trivially self-complementary
    }

    std::sort(hits.begin(), hits.end());
    std::vector<CirculantClass> classes;
    for (const auto& steps : hits) {
        const Graph g = Graph::circulant(n, steps);
        bool placed = false;
        for (auto& cls : classes) {
            if (is_isomorphic(g, Graph::circulant(n, cls.representative), options.iso_order_cap)) {
                cls.members.push_back(steps);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({steps, {steps}});
    }
    return classes;
}

}  // namespace exgraph
