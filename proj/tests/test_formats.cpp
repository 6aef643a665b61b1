#include <doctest.h>

#include <random>

#include "exgraph/assignment.hpp"
#include "exgraph/errors.hpp"
#include "exgraph/graph_io.hpp"
#include "exgraph/scenario.hpp"
#include "oracles.hpp"

using namespace exgraph;

// Golden bytes: these strings are the file formats. Any change here is a
// format break and must be deliberate.

TEST_CASE("golden graph json") {
    const char* expected =
        R"({"order":8,"edges":[[0,1],[0,4],[0,7],[1,2],[1,5],[2,3],[2,6],[3,4],[3,7],[4,5],[5,6],[6,7]]})"
        "\n";
    CHECK(graph_to_json_string(Graph::circulant(8, {1, 4})) == expected);
}

TEST_CASE("golden labeled graph json") {
    Graph g(2);
    g.add_edge(0, 1);
    g.set_labels({"a", "b"});
    CHECK(graph_to_json_string(g) == R"({"order":2,"edges":[[0,1]],"labels":["a","b"]})" "\n");
}

TEST_CASE("golden dot output") {
    const char* expected =
        "graph G {\n"
        "  0;\n"
        "  1;\n"
        "  2;\n"
        "  3;\n"
        "  4;\n"
        "  0 -- 1;\n"
        "  0 -- 4;\n"
        "  1 -- 2;\n"
        "  2 -- 3;\n"
        "  3 -- 4;\n"
        "}\n";
    CHECK(graph_to_dot(Graph::cycle(5)) == expected);

    const char* labeled =
        "graph G {\n"
        "  0 [label=\"0,1|0,1\"];\n"
        "  1 [label=\"0,1|1,2\"];\n"
        "  2 [label=\"0,1|2,3\"];\n"
        "  3 [label=\"0,1|3,4\"];\n"
        "  4 [label=\"0,1|4,0\"];\n"
        "  0 -- 1;\n"
        "  0 -- 4;\n"
        "  1 -- 2;\n"
        "  2 -- 3;\n"
        "  3 -- 4;\n"
        "}\n";
    CHECK(graph_to_dot(kcbs_scenario().exclusivity_graph()) == labeled);
}

TEST_CASE("golden kcbs scenario json") {
    const char* expected = R"({
  "name": "KCBS",
  "events": [
    {
      "label": "0,1|0,1",
      "copy": 0,
      "assignments": {
        "0": 0,
        "1": 1
      }
    },
    {
      "label": "0,1|1,2",
      "copy": 0,
      "assignments": {
        "1": 0,
        "2": 1
      }
    },
    {
      "label": "0,1|2,3",
      "copy": 0,
      "assignments": {
        "2": 0,
        "3": 1
      }
    },
    {
      "label": "0,1|3,4",
      "copy": 0,
      "assignments": {
        "3": 0,
        "4": 1
      }
    },
    {
      "label": "0,1|4,0",
      "copy": 0,
      "assignments": {
        "0": 1,
        "4": 0
      }
    }
  ]
}
)";
    CHECK(scenario_to_json_string(kcbs_scenario()) == expected);
}

TEST_CASE("golden assignment json") {
    const char* expected = R"({
  "weights": [
    "1/2",
    "1/2",
    "1/2",
    "1/2",
    "1/2",
    "1/2",
    "1/2",
    "1/2"
  ]
}
)";
    CHECK(assignment_to_json_string(pr_box_assignment()) == expected);
}

TEST_CASE("graph json round trip") {
    std::mt19937 rng(321);
    for (int round = 0; round < 30; ++round) {
        const int n = 1 + static_cast<int>(rng() % 9);
        Graph g = oracle::random_graph(rng, n, 0.4);
        if (round % 2) {
            std::vector<std::string> labels;
            for (int v = 0; v < n; ++v) labels.push_back("ev" + std::to_string(v));
            g.set_labels(labels);
        }
        CHECK(parse_graph(graph_to_json_string(g)) == g);
    }
}

TEST_CASE("graph parsing rejects bad input") {
    CHECK_THROWS_AS(parse_graph("nonsense"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"edges":[]})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"order":2,"edges":[[0,0]]})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"order":2,"edges":[[0,1],[1,0]]})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"order":2,"edges":[[0,5]]})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"order":2,"edges":[[0,1]],"labels":["x"]})"), InputError);
}

TEST_CASE("assignment parsing accepts rationals, decimals, and numbers") {
    const auto a = parse_assignment(R"({"weights":["1/2","0.25",0.125]})");
    CHECK(a[0].rational() == Rational(1, 2));
    CHECK(a[1].rational() == Rational(1, 4));  // decimal strings stay exact
    CHECK_FALSE(a[2].exact());
    CHECK(a[2].value() == 0.125);

    CHECK_THROWS_AS(parse_assignment(R"({"weights":["2/0"]})"), InputError);
    CHECK_THROWS_AS(parse_assignment(R"({"weights":["3/2"]})"), InputError);
    CHECK_THROWS_AS(parse_assignment(R"({"weights":[true]})"), InputError);
    CHECK_THROWS_AS(parse_assignment(R"({})"), InputError);

    // real weights round-trip bit-exactly through JSON numbers
    const ProbabilityAssignment real_weights(
        {Weight(1.0 / std::sqrt(5.0)), Weight(Rational(1, 3))});
    const auto back = parse_assignment(assignment_to_json_string(real_weights));
    CHECK(back[0].value() == 1.0 / std::sqrt(5.0));
    CHECK(back[1].rational() == Rational(1, 3));
}

TEST_CASE("rational parsing and rendering") {
    CHECK(Rational::parse("5/2").str() == "5/2");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("0.2") == Rational(1, 5));
    CHECK(Rational::parse("-1.5") == Rational(-3, 2));
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), InputError);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational::pow(Rational(2), -2) == Rational(1, 4));
}

TEST_CASE("rational parsing tolerates explicit plus signs") {
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("+0.5") == Rational(1, 2));
    CHECK(Rational::parse("+1/2") == Rational(1, 2));
}
