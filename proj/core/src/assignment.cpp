#include "exgraph/assignment.hpp"

#include <cmath>
#include <cstdio>

#include "exgraph/clique.hpp"
#include "exgraph/errors.hpp"

namespace exgraph {

const Rational& Weight::rational() const {
    if (const auto* r = std::get_if<Rational>(&v_)) return *r;
    throw InputError("weight is not exact");
}

double Weight::value() const {
    if (const auto* r = std::get_if<Rational>(&v_)) return r->to_double();
    return std::get<double>(v_);
}

Weight Weight::operator+(const Weight& o) const {
    if (exact() && o.exact()) return {std::get<Rational>(v_) + std::get<Rational>(o.v_)};
    return {value() + o.value()};
}

Weight Weight::operator*(const Weight& o) const {
    if (exact() && o.exact()) return {std::get<Rational>(v_) * std::get<Rational>(o.v_)};
    return {value() * o.value()};
}

std::string Weight::str() const {
    if (exact()) return std::get<Rational>(v_).str();
    return format_real(std::get<double>(v_));
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

ProbabilityAssignment::ProbabilityAssignment(std::vector<Weight> weights)
    : weights_(std::move(weights)) {
    for (const auto& w : weights_) {
        if (w.exact()) {
            const auto& r = w.rational();
            if (r < Rational(0) || r > Rational(1))
                throw InputError("assignment weight " + r.str() + " outside [0,1]");
        } else {
            const double v = w.value();
            if (!std::isfinite(v) || v < -1e-12 || v > 1.0 + 1e-12)
                throw InputError("assignment weight " + format_real(v) + " outside [0,1]");
        }
    }
}

ProbabilityAssignment ProbabilityAssignment::uniform(int n, Weight w) {
    return ProbabilityAssignment(std::vector<Weight>(static_cast<std::size_t>(n), w));
}

ProbabilityAssignment pr_box_assignment() {
    return ProbabilityAssignment::uniform(8, Rational(1, 2));
}

ProbabilityAssignment product_assignment(const ProbabilityAssignment& a1,
                                         const ProbabilityAssignment& a2) {
    std::vector<Weight> weights;
    weights.reserve(static_cast<std::size_t>(a1.size()) * a2.size());
    for (int i = 0; i < a1.size(); ++i)
        for (int j = 0; j < a2.size(); ++j) weights.push_back(a1[i] * a2[j]);
    return ProbabilityAssignment(std::move(weights));
}

ExclusivityCheck check_exclusivity(const ProbabilityAssignment& a, const Scenario& s,
                                   double real_slack) {
    if (a.size() != s.size())
        throw InputError("assignment has " + std::to_string(a.size()) + " weights for " +
                         std::to_string(s.size()) + " events");

    const Graph g = s.exclusivity_graph();
    ExclusivityCheck out;
    for (const auto& clique : enumerate_maximal_cliques(g)) {
        Weight sum;
        bool all_exact = true;
        for (int v : clique) {
            sum = sum + a[v];
            all_exact = all_exact && a[v].exact();
        }
        const bool violated =
            all_exact ? sum.rational() > Rational(1) : sum.value() > 1.0 + real_slack;
        if (violated) {
            out.admissible = false;
            out.violating_clique = clique;
            out.clique_sum = sum;
            return out;
        }
    }
    return out;
}

Weight assignment_value(const ProbabilityAssignment& a, const Scenario& s,
                        std::optional<std::span<const int>> subset) {
    if (a.size() != s.size())
        throw InputError("assignment/scenario size mismatch");
    Weight sum;
    if (!subset) {
        for (int i = 0; i < a.size(); ++i) sum = sum + a[i];
        return sum;
    }
    for (int i : *subset) {
        if (i < 0 || i >= a.size())
            throw InputError("subset index " + std::to_string(i) + " out of range");
        sum = sum + a[i];
    }
    return sum;
}

nlohmann::ordered_json assignment_to_json(const ProbabilityAssignment& a) {
    nlohmann::ordered_json j;
    auto weights = nlohmann::ordered_json::array();
    // Exact weights as "p/q" strings; reals as JSON numbers, which
    // round-trip bit-exactly.
    for (const auto& w : a.weights()) {
        if (w.exact())
            weights.push_back(w.str());
        else
            weights.push_back(w.value());
    }
    j["weights"] = std::move(weights);
    return j;
}

std::string assignment_to_json_string(const ProbabilityAssignment& a) {
    return assignment_to_json(a).dump(2) + "\n";
}

ProbabilityAssignment assignment_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array())
        throw InputError("assignment JSON needs a \"weights\" array");
    std::vector<Weight> weights;
    for (const auto& w : j["weights"]) {
        if (w.is_string()) {
            weights.emplace_back(Rational::parse(w.get<std::string>()));
        } else if (w.is_number()) {
            weights.emplace_back(w.get<double>());
        } else {
            throw InputError("assignment weight must be a string or number");
        }
    }
    return ProbabilityAssignment(std::move(weights));
}

ProbabilityAssignment parse_assignment(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("bad assignment JSON: ") + e.what());
    }
    return assignment_from_json(j);
}

}  // namespace exgraph
