#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "exgraph/rational.hpp"
#include "exgraph/scenario.hpp"

namespace exgraph {

// Event weight that stays exact as long as every input is exact.
// Arithmetic mixing a rational with a real demotes to double; 5/2 vs 1
// style comparisons on rational weights are exact.
class Weight {
public:
    Weight() : v_(Rational(0)) {}
    Weight(Rational r) : v_(std::move(r)) {}  // NOLINT: implicit by intent
    Weight(double x) : v_(x) {}               // NOLINT: implicit by intent

    bool exact() const noexcept { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const;  // throws InputError when inexact
    double value() const;

    Weight operator+(const Weight& o) const;
    Weight operator*(const Weight& o) const;

    // "p/q" for exact values, 10-significant-digit decimal otherwise.
    std::string str() const;

private:
    std::variant<Rational, double> v_;
};

std::string format_real(double x);  // 10 significant digits

// Per-event weights aligned with a scenario's event order, each in [0,1].
class ProbabilityAssignment {
public:
    explicit ProbabilityAssignment(std::vector<Weight> weights);

    static ProbabilityAssignment uniform(int n, Weight w);

    int size() const noexcept { return static_cast<int>(weights_.size()); }
    const std::vector<Weight>& weights() const noexcept { return weights_; }
    const Weight& operator[](int i) const { return weights_[static_cast<std::size_t>(i)]; }

private:
    std::vector<Weight> weights_;
};

// Weight 1/2 on each of the 8 CHSH events (a xor b = xy).
ProbabilityAssignment pr_box_assignment();

// Weight of (e1, e2) = w1(e1) * w2(e2); index layout matches
// product_scenario.
ProbabilityAssignment product_assignment(const ProbabilityAssignment& a1,
                                         const ProbabilityAssignment& a2);

struct ExclusivityCheck {
    bool admissible = true;
    // One violating clique (vertex ids) and its weight sum, when violated.
    std::vector<int> violating_clique;
    Weight clique_sum;
};

// The exclusivity principle: the weight sum over every clique of the
// exclusivity graph must not exceed 1. Maximal cliques suffice. Rational
// sums compare exactly; real sums get `real_slack` to absorb roundoff.
ExclusivityCheck check_exclusivity(const ProbabilityAssignment& a, const Scenario& s,
                                   double real_slack = 1e-9);

// Sum of weights over `subset` (all events when absent).
Weight assignment_value(const ProbabilityAssignment& a, const Scenario& s,
                        std::optional<std::span<const int>> subset = std::nullopt);

// {"weights": ["1/2", "0.25", ...]}
nlohmann::ordered_json assignment_to_json(const ProbabilityAssignment& a);
std::string assignment_to_json_string(const ProbabilityAssignment& a);
ProbabilityAssignment assignment_from_json(const nlohmann::json& j);
ProbabilityAssignment parse_assignment(std::string_view text);

}  // namespace exgraph
