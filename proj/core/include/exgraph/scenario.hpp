#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exgraph/graph.hpp"

namespace exgraph {

// One outcome assignment to one test. Tests are namespaced by the copy
// index of the experiment they belong to, so independent copies never
// share a test.
struct TestOutcome {
    int copy = 0;
    int test = 0;
    int outcome = 0;

    auto key() const { return std::pair{copy, test}; }
    bool operator==(const TestOutcome&) const = default;
};

// A measurement event "a,b,...|x,y,...": outcomes obtained when a set of
// compatible tests is performed. Assignments are kept sorted by
// (copy, test) and must be non-empty with unique tests.
class Event {
public:
    Event(std::vector<TestOutcome> assignments, std::string label = "");

    const std::vector<TestOutcome>& assignments() const noexcept { return assignments_; }
    const std::string& label() const noexcept { return label_; }

    std::optional<int> outcome(int copy, int test) const;

    // All assignments in one copy namespace; returns it when so.
    std::optional<int> single_copy() const;

    bool operator==(const Event& o) const { return assignments_ == o.assignments_; }

private:
    std::vector<TestOutcome> assignments_;
    std::string label_;
};

// Exclusive: some shared test yields different outcomes. Events that
// share no test (in particular events of distinct copies) are never
// exclusive.
bool are_exclusive(const Event& a, const Event& b);

class Scenario {
public:
    Scenario(std::string name, std::vector<Event> events);

    const std::string& name() const noexcept { return name_; }
    const std::vector<Event>& events() const noexcept { return events_; }
    int size() const noexcept { return static_cast<int>(events_.size()); }

    // One vertex per event in list order, edges between exclusive events,
    // labels from event labels.
    Graph exclusivity_graph() const;

private:
    std::string name_;
    std::vector<Event> events_;
};

// The 5 events 0,1|i,i+1 with indices mod 5; exclusivity graph C5.
Scenario kcbs_scenario();

// The 8 events a,b|x,y with a xor b = x*y; Alice and Bob tests are
// distinct; exclusivity graph isomorphic to Ci8(1,4).
Scenario chsh_scenario();

// All pairs (e1, e2) with the right factor moved into fresh copy
// namespaces; event (i, j) gets index i * size(s2) + j. The exclusivity
// graph of the result is the OR product of the factor graphs.
Scenario product_scenario(const Scenario& s1, const Scenario& s2,
                          int max_events = kDefaultProductOrderCap);

// {"name": ..., "events": [{"label": ..., "copy": c, "assignments":
// {"t": o, ...}}, ...]}. Events spanning several copies encode
// assignment keys as "copy:test" and omit "copy".
nlohmann::ordered_json scenario_to_json(const Scenario& s);
std::string scenario_to_json_string(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);
Scenario parse_scenario(std::string_view text);

}  // namespace exgraph
