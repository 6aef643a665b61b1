#pragma once

#include <vector>

#include "exgraph/clique.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/graph_iso.hpp"
#include "exgraph/rational.hpp"
#include "exgraph/scenario.hpp"
#include "exgraph/simplex.hpp"
#include "exgraph/theta.hpp"

namespace exgraph {

struct SolveOptions {
    SearchBudget budget{};
    ThetaOptions theta{};
    int iso_order_cap = kDefaultIsoOrderCap;
    int product_order_cap = kDefaultProductOrderCap;
    // Relative tolerance for "equals a known constant" comparisons.
    double tolerance = 1e-6;
    bool use_cache = true;
};

// The (classical, quantum, exclusivity) bounds of an exclusivity graph:
// independence number, Lovasz number, fractional packing number.
struct BoundTriple {
    Rational classical;
    double quantum = 0.0;
    Rational exclusivity;
    bool proven = true;  // false when the independence search timed out
};

BoundTriple bound_triple(const Graph& g, const SolveOptions& options = {});
BoundTriple bound_triple(const Scenario& s, const SolveOptions& options = {});

Rational alpha(const Graph& g, const SolveOptions& options = {});
long omega(const Graph& g, const SolveOptions& options = {});
double lovasz_theta(const Graph& g, const SolveOptions& options = {});

// Fractional packing number: max sum w_i over 0 <= w <= 1 with
// sum_{i in C} w_i <= 1 for every maximal clique C. Exact rational.
Rational alpha_star(const Graph& g, const SolveOptions& options = {});

// Vertex-transitive shortcut |G| / omega(G); requires g vertex-transitive.
Rational vt_alpha_star(const Graph& g, const SolveOptions& options = {});

// The bound on the original inequality from the exclusivity principle
// applied to n independent copies: |G| * p_n with
// p_n = omega(G^*n)^(-1/n), the OR power clique number.
struct CopyBound {
    int copies = 1;
    CliqueResult omega_power;
    double max_event_probability = 0.0;  // p_n
    double bound = 0.0;                  // |G| * p_n
};

CopyBound ge_copy_bound(const Graph& g, int copies, const SolveOptions& options = {});

// Shannon capacity bracket: lower from exact independence numbers of
// strong powers (proven results only), upper from the Lovasz number.
struct PowerIndependence {
    int power = 1;
    CliqueResult independent_set;
};

struct CapacityBounds {
    double lower = 0.0;
    double upper = 0.0;
    std::vector<PowerIndependence> per_power;
};

CapacityBounds shannon_bounds(const Graph& g, int max_power, const SolveOptions& options = {});

// Per-vertex min/max of w_i over the optimal face of the alpha* LP.
// unique iff the optimum forces every weight.
struct UniquenessProbe {
    Rational optimum;
    bool unique = false;
    std::vector<Rational> forced;                       // set when unique
    std::vector<std::pair<Rational, Rational>> ranges;  // per-vertex [min, max]
};

UniquenessProbe uniqueness_probe(const Graph& g, const SolveOptions& options = {});

// The self-complementary vertex-transitive family: graphs where the
// exclusivity principle on two copies pins the quantum maximum sqrt(n).
struct Result2Check {
    bool self_complementary = false;
    bool vertex_transitive = false;
    bool order_not_prime_square = false;
    Rational independence;
    double theta = 0.0;
    bool alpha_below_theta = false;
    bool theta_is_sqrt_order = false;
    CopyBound two_copy;
    bool two_copy_matches_sqrt = false;
    bool proven = true;
    bool pass = false;
};

Result2Check result2_check(const Graph& g, const SolveOptions& options = {});

// Self-complementary circulants on n vertices, grouped by isomorphism
// class. Representative = lexicographically least step set in the class.
struct CirculantClass {
    std::vector<int> representative;
    std::vector<std::vector<int>> members;
};

std::vector<CirculantClass> enumerate_scvt_circulants(int n, const SolveOptions& options = {});

// Drops every memoized invariant (theta / clique / alpha* results).
void clear_invariant_cache();

}  // namespace exgraph
