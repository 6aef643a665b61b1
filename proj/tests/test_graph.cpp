#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "exgraph/errors.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/graph_iso.hpp"
#include "oracles.hpp"

using namespace exgraph;

TEST_CASE("circulant constructors") {
    const Graph c5 = Graph::circulant(5, {1});
    CHECK(c5.order() == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    const Graph m4 = Graph::circulant(8, {1, 4});
    CHECK(m4.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(m4.degree(v) == 3);

    const Graph ci13 = Graph::circulant(13, {1, 2, 6});
    CHECK(ci13.edge_count() == 39);
    for (int v = 0; v < 13; ++v) CHECK(ci13.degree(v) == 6);

    CHECK(Graph::circulant(1, {}).order() == 1);
    CHECK_THROWS_AS(Graph::circulant(8, {0}), InputError);
    CHECK_THROWS_AS(Graph::circulant(8, {5}), InputError);
    CHECK_THROWS_AS(Graph::circulant(8, {1, 1}), InputError);
}

TEST_CASE("complement examples") {
    CHECK(is_isomorphic(Graph::cycle(5), complement(Graph::cycle(5))));
    CHECK(is_isomorphic(complement(Graph::circulant(8, {1, 4})), Graph::circulant(8, {1, 2})));
    CHECK(complement(Graph::complete(6)).edge_count() == 0);
}

TEST_CASE("complement is an involution and keeps labels") {
    std::mt19937 rng(7101);
    for (int round = 0; round < 50; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(rng, n, 0.4);
        std::vector<std::string> labels;
        for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
        g.set_labels(labels);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("or product of two pentagons") {
    const Graph p = or_product(Graph::cycle(5), Graph::cycle(5));
    CHECK(p.order() == 25);
    for (int v = 0; v < 25; ++v) CHECK(p.degree(v) == 16);
}

TEST_CASE("K1 is the identity for the or product") {
    const Graph g = Graph::circulant(7, {1, 2});
    CHECK(same_adjacency(or_product(Graph::complete(1), g), g));
    CHECK(same_adjacency(or_product(g, Graph::complete(1)), g));
}

TEST_CASE("first powers are the graph itself") {
    const Graph g = Graph::circulant(6, {1, 3});
    CHECK(or_power(g, 1) == g);
    CHECK(strong_power(g, 1) == g);
    CHECK_THROWS_AS(or_power(g, 0), InputError);
}

TEST_CASE("product order multiplicativity and size caps") {
    const Graph m4 = Graph::circulant(8, {1, 4});
    CHECK(or_power(m4, 3).order() == 512);
    CHECK(strong_product(m4, m4).order() == 64);
    CHECK_THROWS_AS(or_power(Graph::cycle(5), 6), ResourceError);  // 5^6 > 1024
    CHECK(or_power(Graph::cycle(5), 6, 20000).order() == 15625);
}

TEST_CASE("de morgan duality between or and strong powers") {
    std::mt19937 rng(4242);
    for (int round = 0; round < 60; ++round) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int k = 1 + static_cast<int>(rng() % 3);
        const Graph g = oracle::random_graph(rng, n, 0.25 + 0.5 * (round % 3) / 2.0);
        CHECK(or_power(g, k) == complement(strong_power(complement(g), k)));
    }
}

TEST_CASE("strong square of the pentagon holds an independent 5-set") {
    const Graph sq = strong_power(Graph::cycle(5), 2);
    // The slope-2 diagonal: rows differ by 1 or 2, columns by 2 or 4, so
    // no pair is equal-or-adjacent in both coordinates.
    const std::vector<int> diagonal{0, 7, 14, 16, 23};
    CHECK(oracle::pairwise_nonadjacent(sq, diagonal));
}

TEST_CASE("isomorphism witnesses") {
    const Graph a = Graph::circulant(8, {2, 3});
    const Graph b = Graph::circulant(8, {1, 2});

    // v -> 3v mod 8 maps steps {2,3} onto {6,9} ~ {2,1}.
    CHECK(witness_is_isomorphism(a, b, {0, 3, 6, 1, 4, 7, 2, 5}));

    const auto found = find_isomorphism(a, b);
    REQUIRE(found.has_value());
    CHECK(witness_is_isomorphism(a, b, *found));

    CHECK(is_isomorphic(Graph::cycle(5), complement(Graph::cycle(5))));
    CHECK_FALSE(is_isomorphic(Graph::cycle(5), Graph::complete(5)));
}

TEST_CASE("isomorphism search finds planted relabelings") {
    std::mt19937 rng(90210);
    for (int round = 0; round < 30; ++round) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (auto [u, v] : g.edges())
            h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        const auto witness = find_isomorphism(g, h);
        REQUIRE(witness.has_value());
        CHECK(witness_is_isomorphism(g, h, *witness));
    }
}

TEST_CASE("isomorphism respects the order cap") {
    const Graph big = or_power(Graph::cycle(5), 3, 2000);
    CHECK_THROWS_AS(find_isomorphism(big, big), ResourceError);
}

TEST_CASE("vertex transitivity") {
    std::mt19937 rng(555);
    for (int round = 0; round < 20; ++round) {
        const int n = 3 + static_cast<int>(rng() % 14);  // up to 16
        std::vector<int> steps;
        for (int s = 1; s <= n / 2; ++s)
            if (rng() % 2) steps.push_back(s);
        if (steps.empty()) steps.push_back(1);
        CHECK(is_vertex_transitive(Graph::circulant(n, steps)));
    }

    Graph path3(3);
    path3.add_edge(0, 1);
    path3.add_edge(1, 2);
    CHECK_FALSE(is_vertex_transitive(path3));
    const auto orbits = automorphism_orbits(path3);
    REQUIRE(orbits.orbits.size() == 2);
    CHECK(orbits.orbits[0] == std::vector<int>{0, 2});
    CHECK(orbits.orbits[1] == std::vector<int>{1});

    CHECK(is_vertex_transitive(Graph::circulant(8, {1, 4})));
}

TEST_CASE("self-complementarity") {
    CHECK(is_self_complementary(Graph::cycle(5)));
    CHECK(is_self_complementary(Graph::circulant(13, {1, 3, 4})));
    CHECK_FALSE(is_self_complementary(Graph::circulant(8, {1, 4})));
    CHECK_FALSE(is_self_complementary(Graph::complete(4)));
}

TEST_CASE("induced cycles") {
    const auto pentagons = induced_cycles(Graph::circulant(8, {1, 4}), 5);
    CHECK(pentagons.size() == 8);
    for (const auto& p : pentagons) CHECK(p.size() == 5);

    CHECK(induced_cycles(Graph::cycle(5), 5).size() == 1);
    CHECK(induced_cycles(Graph::complete(4), 4).empty());
    CHECK_THROWS_AS(induced_cycles(Graph::cycle(5), 2), InputError);
}

TEST_CASE("labels validate") {
    Graph g(2);
    CHECK_THROWS_AS(g.set_labels({"a"}), InputError);
    CHECK_THROWS_AS(g.set_labels({"a", "a"}), InputError);
    g.set_labels({"a", "b"});
    CHECK(g.label(1) == "b");
    CHECK_THROWS_AS(g.add_edge(0, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 2), InputError);
}
