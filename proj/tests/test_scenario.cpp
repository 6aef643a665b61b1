#include <doctest.h>

#include <cmath>
#include <random>
#include <span>

#include "exgraph/assignment.hpp"
#include "exgraph/errors.hpp"
#include "exgraph/graph_iso.hpp"
#include "exgraph/scenario.hpp"
#include "oracles.hpp"

using namespace exgraph;

TEST_CASE("exclusivity predicate") {
    const auto events = kcbs_scenario().events();
    // 0,1|0,1 vs 0,1|1,2: test 1 yields 1 vs 0
    CHECK(are_exclusive(events[0], events[1]));
    // 0,1|0,1 vs 0,1|2,3: no shared test
    CHECK_FALSE(are_exclusive(events[0], events[2]));
    CHECK_FALSE(are_exclusive(events[0], events[0]));

    for (std::size_t i = 0; i < events.size(); ++i)
        for (std::size_t j = 0; j < events.size(); ++j)
            CHECK(are_exclusive(events[i], events[j]) == are_exclusive(events[j], events[i]));
}

TEST_CASE("events validate") {
    CHECK_THROWS_AS(Event({}), InputError);
    CHECK_THROWS_AS(Event({{0, 1, 0}, {0, 1, 1}}), InputError);
    const Event e({{0, 1, 0}, {0, 0, 1}});
    CHECK(e.label() == "1,0|0,1");  // canonical rendering, tests sorted
    CHECK(e.outcome(0, 1) == 0);
    CHECK_FALSE(e.outcome(1, 1).has_value());
}

TEST_CASE("kcbs scenario") {
    const Scenario s = kcbs_scenario();
    CHECK(s.size() == 5);
    for (const auto& e : s.events()) CHECK(e.assignments().size() == 2);
    CHECK(s.events()[0].label() == "0,1|0,1");
    CHECK(s.events()[4].label() == "0,1|4,0");
    CHECK(same_adjacency(s.exclusivity_graph(), Graph::cycle(5)));
}

TEST_CASE("chsh scenario") {
    const Scenario s = chsh_scenario();
    CHECK(s.size() == 8);
    CHECK(is_isomorphic(s.exclusivity_graph(), Graph::circulant(8, {1, 4})));

    // a xor b = 0 when x = y = 0
    std::vector<std::string> xy00;
    for (const auto& e : s.events())
        if (e.label().ends_with("|0,0")) xy00.push_back(e.label());
    CHECK(xy00 == std::vector<std::string>{"0,0|0,0", "1,1|0,0"});
}

TEST_CASE("product scenario matches the or product") {
    const Scenario kcbs = kcbs_scenario();
    const Scenario prod = product_scenario(kcbs, kcbs);
    CHECK(prod.size() == 25);
    const Graph expected =
        or_product(kcbs.exclusivity_graph(), kcbs.exclusivity_graph());
    CHECK(prod.exclusivity_graph() == expected);  // adjacency and tuple labels

    CHECK(product_scenario(chsh_scenario(), chsh_scenario()).size() == 64);
}

TEST_CASE("product with a single-event scenario preserves the graph") {
    const Scenario single("single", {Event({{0, 99, 0}})});
    const Scenario s = kcbs_scenario();
    CHECK(same_adjacency(product_scenario(s, single).exclusivity_graph(),
                         s.exclusivity_graph()));
}

TEST_CASE("product law on random scenarios") {
    std::mt19937 rng(1331);
    auto random_scenario = [&](int max_events) {
        const int count = 1 + static_cast<int>(rng() % max_events);
        std::vector<Event> events;
        for (int i = 0; i < count; ++i) {
            const int tests = 1 + static_cast<int>(rng() % 3);
            std::vector<TestOutcome> assignments;
            for (int t = 0; t < tests; ++t) {
                const int test = static_cast<int>(rng() % 5);
                bool dup = false;
                for (const auto& a : assignments) dup = dup || a.test == test;
                if (!dup) assignments.push_back({0, test, static_cast<int>(rng() % 3)});
            }
            // de-duplicate identical events by tagging labels
            events.emplace_back(assignments, "e" + std::to_string(i));
        }
        return Scenario("random", events);
    };
    for (int round = 0; round < 25; ++round) {
        const Scenario a = random_scenario(8);
        const Scenario b = random_scenario(8);
        CHECK(same_adjacency(
            product_scenario(a, b, 64 * 64).exclusivity_graph(),
            or_product(a.exclusivity_graph(), b.exclusivity_graph(), 64 * 64)));
    }
}

TEST_CASE("copies never share tests") {
    const Scenario prod = product_scenario(kcbs_scenario(), kcbs_scenario());
    for (const auto& e : prod.events()) {
        CHECK_FALSE(e.single_copy().has_value());
        CHECK(e.assignments().size() == 4);
    }
    // Same local tests in different copies are not exclusive.
    const Event left({{0, 0, 0}, {0, 1, 1}});
    const Event right({{1, 0, 1}, {1, 1, 0}});
    CHECK_FALSE(are_exclusive(left, right));
}

TEST_CASE("pr box assignment") {
    const auto pr = pr_box_assignment();
    const Scenario chsh = chsh_scenario();
    REQUIRE(pr.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(pr[i].rational() == Rational(1, 2));
    CHECK(assignment_value(pr, chsh).rational() == Rational(4));

    for (const auto& pentagon : induced_cycles(chsh.exclusivity_graph(), 5)) {
        const auto sum = assignment_value(pr, chsh, std::span<const int>(pentagon));
        CHECK(sum.rational() == Rational(5, 2));
    }
}

TEST_CASE("product assignments") {
    const auto quarter =
        product_assignment(ProbabilityAssignment::uniform(5, Rational(1, 2)),
                           ProbabilityAssignment::uniform(5, Rational(1, 2)));
    for (int i = 0; i < 25; ++i) CHECK(quarter[i].rational() == Rational(1, 4));

    const double inv_sqrt5 = 1.0 / std::sqrt(5.0);
    const auto fifth = product_assignment(ProbabilityAssignment::uniform(5, inv_sqrt5),
                                          ProbabilityAssignment::uniform(5, inv_sqrt5));
    for (int i = 0; i < 25; ++i) CHECK(fifth[i].value() == doctest::Approx(0.2).epsilon(1e-12));

    const auto zero = product_assignment(ProbabilityAssignment::uniform(5, Rational(0)),
                                         ProbabilityAssignment::uniform(5, Rational(1)));
    for (int i = 0; i < 25; ++i) CHECK(zero[i].rational() == Rational(0));
}

TEST_CASE("exclusivity check on kcbs and its square") {
    const Scenario kcbs = kcbs_scenario();
    const Scenario square = product_scenario(kcbs, kcbs);

    CHECK(check_exclusivity(ProbabilityAssignment::uniform(5, Rational(1, 2)), kcbs).admissible);

    const auto violated =
        check_exclusivity(ProbabilityAssignment::uniform(25, Rational(1, 4)), square);
    REQUIRE_FALSE(violated.admissible);
    CHECK(violated.violating_clique.size() == 5);
    CHECK(violated.clique_sum.rational() == Rational(5, 4));

    CHECK(check_exclusivity(ProbabilityAssignment::uniform(25, Rational(1, 5)), square)
              .admissible);

    // Real-weight product of two 1/sqrt(5) assignments stays admissible
    // despite roundoff.
    const double inv_sqrt5 = 1.0 / std::sqrt(5.0);
    const auto product = product_assignment(ProbabilityAssignment::uniform(5, inv_sqrt5),
                                            ProbabilityAssignment::uniform(5, inv_sqrt5));
    CHECK(check_exclusivity(product, square).admissible);
}

TEST_CASE("lowering a weight preserves admissibility") {
    std::mt19937 rng(20240);
    const Scenario kcbs = kcbs_scenario();
    for (int round = 0; round < 40; ++round) {
        std::vector<Weight> weights;
        for (int i = 0; i < 5; ++i)
            weights.emplace_back(Rational(static_cast<long>(rng() % 3), 4));
        const ProbabilityAssignment a(weights);
        if (!check_exclusivity(a, kcbs).admissible) continue;
        auto lowered = weights;
        const int pick = static_cast<int>(rng() % 5);
        lowered[static_cast<std::size_t>(pick)] = Rational(0);
        CHECK(check_exclusivity(ProbabilityAssignment(lowered), kcbs).admissible);
    }
}

TEST_CASE("single-event scenario yields K1") {
    const Scenario single("single", {Event({{0, 0, 0}})});
    const Graph g = single.exclusivity_graph();
    CHECK(g.order() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("assignment value of the uniform kcbs maximum") {
    const Scenario kcbs = kcbs_scenario();
    const auto uniform = ProbabilityAssignment::uniform(5, 1.0 / std::sqrt(5.0));
    CHECK(assignment_value(uniform, kcbs).value() ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("assignment value subsets and errors") {
    const Scenario kcbs = kcbs_scenario();
    const auto a = ProbabilityAssignment::uniform(5, Rational(1, 2));
    const std::vector<int> empty;
    CHECK(assignment_value(a, kcbs, std::span<const int>(empty)).rational() == Rational(0));
    const std::vector<int> bad{7};
    CHECK_THROWS_AS(assignment_value(a, kcbs, std::span<const int>(bad)), InputError);
    CHECK_THROWS_AS(
        check_exclusivity(ProbabilityAssignment::uniform(4, Rational(1, 2)), kcbs),
        InputError);
    CHECK_THROWS_AS(ProbabilityAssignment::uniform(3, Rational(3, 2)), InputError);
}

TEST_CASE("scenario json round trip") {
    for (const Scenario& s : {kcbs_scenario(), chsh_scenario(),
                              product_scenario(kcbs_scenario(), kcbs_scenario())}) {
        const std::string text = scenario_to_json_string(s);
        const Scenario back = parse_scenario(text);
        CHECK(scenario_to_json_string(back) == text);
        CHECK(back.exclusivity_graph() == s.exclusivity_graph());
    }
}

TEST_CASE("scenario parsing rejects bad input") {
    CHECK_THROWS_AS(parse_scenario("not json"), InputError);
    CHECK_THROWS_AS(parse_scenario(R"({"name":"x","events":[]})"), InputError);
    // duplicate test inside one event (plain and copy-qualified keys)
    CHECK_THROWS_AS(
        parse_scenario(
            R"({"name":"x","events":[{"copy":0,"assignments":{"0":0,"0:0":1}}]})"),
        InputError);
    CHECK_THROWS_AS(parse_scenario(R"({"name":"x","events":[{"assignments":{}}]})"),
                    InputError);
}

TEST_CASE("hand-written chsh file reproduces the circulant") {
    const char* text = R"({
      "name": "CHSH-by-hand",
      "events": [
        {"label": "0,0|0,0", "copy": 0, "assignments": {"0": 0, "2": 0}},
        {"label": "1,1|0,0", "copy": 0, "assignments": {"0": 1, "2": 1}},
        {"label": "0,0|0,1", "copy": 0, "assignments": {"0": 0, "3": 0}},
        {"label": "1,1|0,1", "copy": 0, "assignments": {"0": 1, "3": 1}},
        {"label": "0,0|1,0", "copy": 0, "assignments": {"1": 0, "2": 0}},
        {"label": "1,1|1,0", "copy": 0, "assignments": {"1": 1, "2": 1}},
        {"label": "0,1|1,1", "copy": 0, "assignments": {"1": 0, "3": 1}},
        {"label": "1,0|1,1", "copy": 0, "assignments": {"1": 1, "3": 0}}
      ]
    })";
    const Scenario s = parse_scenario(text);
    CHECK(is_isomorphic(s.exclusivity_graph(), Graph::circulant(8, {1, 4})));
}
