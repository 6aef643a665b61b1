#include "exgraph/scenario.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "exgraph/errors.hpp"

namespace exgraph {

namespace {

// Canonical rendering "a,b|x,y" in (copy, test) order; tests from copies
// beyond the first are rendered as "copy:test".
std::string render_label(const std::vector<TestOutcome>& assignments) {
    std::ostringstream outcomes, tests;
    bool first = true;
    for (const auto& a : assignments) {
        if (!first) {
            outcomes << ",";
            tests << ",";
        }
        first = false;
        outcomes << a.outcome;
        if (a.copy != 0) tests << a.copy << ":";
        tests << a.test;
    }
    return outcomes.str() + "|" + tests.str();
}

}  // namespace

Event::Event(std::vector<TestOutcome> assignments, std::string label)
    : assignments_(std::move(assignments)), label_(std::move(label)) {
    if (assignments_.empty()) throw InputError("event needs at least one test assignment");
    std::sort(assignments_.begin(), assignments_.end(),
              [](const TestOutcome& a, const TestOutcome& b) { return a.key() < b.key(); });
    for (std::size_t i = 1; i < assignments_.size(); ++i)
        if (assignments_[i - 1].key() == assignments_[i].key())
            throw InputError("duplicate test in event");
    if (label_.empty()) label_ = render_label(assignments_);
}

std::optional<int> Event::outcome(int copy, int test) const {
    for (const auto& a : assignments_)
        if (a.copy == copy && a.test == test) return a.outcome;
    return std::nullopt;
}

std::optional<int> Event::single_copy() const {
    const int c = assignments_.front().copy;
    for (const auto& a : assignments_)
        if (a.copy != c) return std::nullopt;
    return c;
}

bool are_exclusive(const Event& a, const Event& b) {
    // Both assignment lists are sorted by (copy, test); walk them in step.
    auto it = a.assignments().begin();
    auto jt = b.assignments().begin();
    while (it != a.assignments().end() && jt != b.assignments().end()) {
        if (it->key() < jt->key())
            ++it;
        else if (jt->key() < it->key())
            ++jt;
        else {
            if (it->outcome != jt->outcome) return true;
            ++it;
            ++jt;
        }
    }
    return false;
}

Scenario::Scenario(std::string name, std::vector<Event> events)
    : name_(std::move(name)), events_(std::move(events)) {
    if (events_.empty()) throw InputError("scenario needs at least one event");
}

Graph Scenario::exclusivity_graph() const {
    const int n = size();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (are_exclusive(events_[static_cast<std::size_t>(i)],
                              events_[static_cast<std::size_t>(j)]))
                g.add_edge(i, j);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (const auto& e : events_) labels.push_back(e.label());
    g.set_labels(std::move(labels));
    return g;
}

Scenario kcbs_scenario() {
    std::vector<Event> events;
    for (int i = 0; i < 5; ++i) {
        const int j = (i + 1) % 5;
        events.emplace_back(std::vector<TestOutcome>{{0, i, 0}, {0, j, 1}},
                            "0,1|" + std::to_string(i) + "," + std::to_string(j));
    }
    return Scenario("KCBS", std::move(events));
}

Scenario chsh_scenario() {
    // Alice's tests are 0 and 1, Bob's are 2 and 3; the label keeps the
    // conventional x,y in {0,1} rendering.
    std::vector<Event> events;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    if ((a ^ b) != (x & y)) continue;
                    std::ostringstream label;
                    label << a << "," << b << "|" << x << "," << y;
                    events.emplace_back(std::vector<TestOutcome>{{0, x, a}, {0, 2 + y, b}},
                                        label.str());
                }
    return Scenario("CHSH", std::move(events));
}

Scenario product_scenario(const Scenario& s1, const Scenario& s2, int max_events) {
    const long long n = static_cast<long long>(s1.size()) * s2.size();
    if (n > max_events)
        throw ResourceError("product scenario size " + std::to_string(n) + " exceeds cap " +
                            std::to_string(max_events));

    int copy_shift = 0;
    for (const auto& e : s1.events())
        for (const auto& a : e.assignments()) copy_shift = std::max(copy_shift, a.copy + 1);

    std::vector<Event> events;
    events.reserve(static_cast<std::size_t>(n));
    for (const auto& e1 : s1.events()) {
        for (const auto& e2 : s2.events()) {
            std::vector<TestOutcome> merged = e1.assignments();
            for (const auto& a : e2.assignments())
                merged.push_back({a.copy + copy_shift, a.test, a.outcome});
            events.emplace_back(std::move(merged),
                                "(" + e1.label() + ")*(" + e2.label() + ")");
        }
    }
    return Scenario(s1.name() + "*" + s2.name(), std::move(events));
}

nlohmann::ordered_json scenario_to_json(const Scenario& s) {
    nlohmann::ordered_json j;
    j["name"] = s.name();
    auto events = nlohmann::ordered_json::array();
    for (const auto& e : s.events()) {
        nlohmann::ordered_json je;
        je["label"] = e.label();
        const auto copy = e.single_copy();
        if (copy) je["copy"] = *copy;
        nlohmann::ordered_json assignments;
        for (const auto& a : e.assignments()) {
            std::string key = copy ? std::to_string(a.test)
                                   : std::to_string(a.copy) + ":" + std::to_string(a.test);
            assignments[key] = a.outcome;
        }
        je["assignments"] = std::move(assignments);
        events.push_back(std::move(je));
    }
    j["events"] = std::move(events);
    return j;
}

std::string scenario_to_json_string(const Scenario& s) {
    return scenario_to_json(s).dump(2) + "\n";
}

namespace {

int parse_int_strict(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError(std::string("bad ") + what + ": " + s);
    }
}

}  // namespace

Scenario scenario_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("events"))
        throw InputError("scenario JSON needs \"events\"");
    const std::string name = j.value("name", std::string("scenario"));
    if (!j["events"].is_array() || j["events"].empty())
        throw InputError("scenario needs a non-empty event list");

    std::vector<Event> events;
    for (const auto& je : j["events"]) {
        if (!je.is_object() || !je.contains("assignments") || !je["assignments"].is_object())
            throw InputError("event needs an \"assignments\" object");
        const int default_copy = je.value("copy", 0);
        std::vector<TestOutcome> assignments;
        for (const auto& [key, value] : je["assignments"].items()) {
            if (!value.is_number_integer()) throw InputError("event outcome must be an integer");
            TestOutcome a;
            const auto colon = key.find(':');
            if (colon == std::string::npos) {
                a.copy = default_copy;
                a.test = parse_int_strict(key, "test id");
            } else {
                a.copy = parse_int_strict(key.substr(0, colon), "copy tag");
                a.test = parse_int_strict(key.substr(colon + 1), "test id");
            }
            if (a.copy < 0) throw InputError("copy tag must be nonnegative");
            a.outcome = value.get<int>();
            assignments.push_back(a);
        }
        events.emplace_back(std::move(assignments), je.value("label", std::string()));
    }
    return Scenario(name, std::move(events));
}

Scenario parse_scenario(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("bad scenario JSON: ") + e.what());
    }
    return scenario_from_json(j);
}

}  // namespace exgraph
