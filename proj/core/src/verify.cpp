#include "exgraph/verify.hpp"

#include <chrono>
#include <cmath>

#include "exgraph/assignment.hpp"
#include "exgraph/errors.hpp"
#include "exgraph/graph_io.hpp"

namespace exgraph {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kSqrt5 = 2.23606797749978969;

Graph apply_mutation(Graph g, const std::optional<std::pair<int, int>>& drop_edge) {
    if (!drop_edge) return g;
    auto [u, v] = *drop_edge;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw InputError("mutation edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") is not in the graph");
    auto edges = g.edges();
    std::erase_if(edges, [&](const std::pair<int, int>& e) {
        return e == std::pair{std::min(u, v), std::max(u, v)};
    });
    Graph out = Graph::from_edges(g.order(), edges);
    if (g.has_labels()) out.set_labels(g.labels());
    return out;
}

Claim claim_exact(std::string description, const std::string& expected,
                  const std::string& computed) {
    return Claim{std::move(description), expected, computed, 0.0, expected == computed};
}

Claim claim_rational(std::string description, const Rational& expected,
                     const Rational& computed) {
    return Claim{std::move(description), expected.str(), computed.str(), 0.0,
                 expected == computed};
}

Claim claim_count(std::string description, long expected, long computed) {
    return Claim{std::move(description), std::to_string(expected), std::to_string(computed),
                 0.0, expected == computed};
}

Claim claim_real(std::string description, double expected, double computed, double tol) {
    const bool holds = std::abs(computed - expected) <= tol * std::max(1.0, std::abs(expected));
    return Claim{std::move(description), format_real(expected), format_real(computed), tol,
                 holds};
}

Claim claim_true(std::string description, bool computed) {
    return Claim{std::move(description), "true", computed ? "true" : "false", 0.0, computed};
}

Claim claim_greater(std::string description, double lhs, double rhs) {
    return Claim{std::move(description), "> " + format_real(rhs), format_real(lhs), 0.0,
                 lhs > rhs};
}

void finalize(CheckResult& result, bool budget_exhausted, Clock::time_point start) {
    bool all_hold = true;
    for (const auto& c : result.claims) all_hold = all_hold && c.holds;
    if (budget_exhausted)
        result.verdict = Verdict::Inconclusive;
    else
        result.verdict = all_hold ? Verdict::Pass : Verdict::Fail;
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

nlohmann::ordered_json clique_witness_json(const CliqueResult& r) {
    nlohmann::ordered_json j;
    j["size"] = r.size;
    j["witness"] = r.witness;
    j["proven"] = r.proven;
    j["nodes"] = r.nodes;
    j["seconds"] = r.seconds;
    return j;
}

nlohmann::ordered_json theta_witness_json(const ThetaCertificate& cert, bool with_matrix) {
    nlohmann::ordered_json j;
    j["value"] = cert.value;
    j["primal"] = cert.primal;
    j["dual"] = cert.dual;
    j["gap"] = cert.gap;
    j["iterations"] = cert.iterations;
    j["max_edge_entry"] = cert.max_edge_entry;
    j["max_edge_residual"] = cert.max_edge_residual;
    j["reconstructed"] = cert.reconstructed;
    if (with_matrix) {
        auto rows = nlohmann::ordered_json::array();
        for (int i = 0; i < cert.psd_matrix.rows(); ++i) {
            auto row = nlohmann::ordered_json::array();
            for (int k = 0; k < cert.psd_matrix.cols(); ++k) row.push_back(cert.psd_matrix(i, k));
            rows.push_back(std::move(row));
        }
        j["psd_matrix"] = std::move(rows);
    }
    return j;
}

nlohmann::ordered_json weights_json(const std::vector<Rational>& weights) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& w : weights) arr.push_back(w.str());
    return arr;
}

// alpha* LP with the witness kept for the report.
std::pair<LpResult, std::vector<std::vector<int>>> packing_lp(const Graph& g) {
    const int n = g.order();
    auto cliques = enumerate_maximal_cliques(g);
    std::vector<LinearConstraint> constraints;
    constraints.reserve(cliques.size());
    for (const auto& clique : cliques) {
        LinearConstraint c;
        for (int v : clique) c.terms.emplace_back(v, Rational(1));
        c.sense = ConstraintSense::LessEq;
        c.rhs = Rational(1);
        constraints.push_back(std::move(c));
    }
    auto lp = lp_maximize(n, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)),
                          constraints);
    return {std::move(lp), std::move(cliques)};
}

// Bound-triple verifier shared by KCBS and CHSH.
CheckResult verify_triple(const std::string& name, const Scenario& scenario,
                          const Graph& reference, const std::string& reference_name,
                          const Rational& classical, double quantum,
                          const Rational& exclusivity, const VerifyOptions& options) {
    const auto start = Clock::now();
    CheckResult result;
    result.name = name;

    const Graph g = apply_mutation(scenario.exclusivity_graph(), options.drop_edge);

    result.claims.push_back(
        claim_count("scenario event count", reference.order(), scenario.size()));
    result.claims.push_back(claim_true("exclusivity graph is isomorphic to " + reference_name,
                                       find_isomorphism(g, reference).has_value()));

    const auto independent = max_independent_set(g, options.solve.budget);
    result.claims.push_back(
        claim_rational("classical bound (independence number)", classical,
                       Rational(independent.size)));

    const auto cert = sdp_theta(g, options.solve.theta);
    result.claims.push_back(claim_real("quantum bound (Lovasz number)", quantum, cert.value,
                                       options.solve.tolerance));

    const auto [lp, cliques] = packing_lp(g);
    result.claims.push_back(
        claim_rational("exclusivity bound (fractional packing number)", exclusivity, lp.value));

    result.witnesses["graph"] = graph_to_json(g);
    result.witnesses["independent_set"] = clique_witness_json(independent);
    result.witnesses["theta"] = theta_witness_json(cert, true);
    result.witnesses["packing_weights"] = weights_json(lp.witness);
    result.witnesses["maximal_cliques"] = cliques;

    finalize(result, !independent.proven, start);
    return result;
}

}  // namespace

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "fail";
}

CheckResult verify_kcbs(const VerifyOptions& options) {
    return verify_triple("kcbs-triple", kcbs_scenario(), Graph::cycle(5), "C5", Rational(2),
                         kSqrt5, Rational(5, 2), options);
}

CheckResult verify_chsh(const VerifyOptions& options) {
    return verify_triple("chsh-triple", chsh_scenario(), Graph::circulant(8, {1, 4}), "Ci8(1,4)",
                         Rational(3), 2.0 + std::sqrt(2.0), Rational(4), options);
}

CheckResult verify_result1(const VerifyOptions& options) {
    const auto start = Clock::now();
    CheckResult result;
    result.name = "result1";

    const Scenario kcbs = kcbs_scenario();
    const Scenario prod = product_scenario(kcbs, kcbs);
    const Graph scenario_graph = prod.exclusivity_graph();
    const Graph g = apply_mutation(
        or_product(kcbs.exclusivity_graph(), kcbs.exclusivity_graph()), options.drop_edge);

    result.claims.push_back(claim_count("two-copy scenario event count", 25, prod.size()));
    result.claims.push_back(claim_true(
        "exclusivity graph of the product scenario equals the OR product C5*C5",
        scenario_graph == g));

    // The diagonal family through (i, j): events (i+k, j+2k), k = 0..4,
    // indices mod 5. Every one of the 25 translates must be a 5-clique.
    int clique_families = 0;
    auto diagonal = [](int i, int j) {
        std::vector<int> family;
        for (int k = 0; k < 5; ++k) family.push_back(((i + k) % 5) * 5 + (j + 2 * k) % 5);
        return family;
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (is_clique(g, diagonal(i, j))) ++clique_families;
    result.claims.push_back(
        claim_count("diagonal event families that are pairwise exclusive", 25, clique_families));

    const auto [lp, cliques] = packing_lp(g);
    result.claims.push_back(
        claim_rational("exclusivity bound alpha*(C5*C5)", Rational(5), lp.value));

    // The 5 translates of either diagonal partition the 25 events, so a
    // total weight of 5 forces every diagonal clique to weigh exactly 1.
    bool partitions = true;
    for (int slope : {2, 3}) {
        Bitset covered(25);
        for (int c = 0; c < 5; ++c) {
            std::vector<int> line;
            for (int x = 0; x < 5; ++x) line.push_back(x * 5 + (slope * x + c) % 5);
            partitions = partitions && is_clique(g, line);
            for (int v : line) {
                partitions = partitions && !covered.test(v);
                covered.set(v);
            }
        }
        partitions = partitions && covered.count() == 25;
    }
    result.claims.push_back(claim_true(
        "diagonal cliques tile the 25 events, so every optimum saturates each of them",
        partitions && lp.value == Rational(5)));

    // Among uniform assignments the optimum is pinned: 25c = 5 with every
    // clique sum at most 1 leaves only c = 1/5.
    const Rational uniform_weight = lp.value / Rational(25);
    bool uniform_feasible = true;
    for (const auto& clique : cliques)
        uniform_feasible =
            uniform_feasible && Rational(static_cast<long>(clique.size())) * uniform_weight <=
                                    Rational(1);
    result.claims.push_back(
        claim_rational("unique uniform optimal weight", Rational(1, 5), uniform_weight));
    result.claims.push_back(
        claim_true("the uniform 1/5 assignment satisfies every clique constraint",
                   uniform_feasible));

    // The per-vertex LP face is wider than the uniform point; the forcing
    // above lives in the diagonal sums, not in single weights.
    const auto probe = uniqueness_probe(g, options.solve);
    result.claims.push_back(claim_exact("per-vertex probe verdict on the optimal face",
                                        "multiple", probe.unique ? "unique" : "multiple"));

    const double local = std::sqrt(uniform_weight.to_double());
    result.claims.push_back(claim_real("derived local event probability 1/sqrt(5)", 1.0 / kSqrt5,
                                       local, options.solve.tolerance));

    const auto cert = sdp_theta(kcbs.exclusivity_graph(), options.solve.theta);
    result.claims.push_back(claim_real("KCBS value 5/sqrt(5) matches theta(C5)", cert.value,
                                       5.0 * local, options.solve.tolerance));

    const auto two_copy = ge_copy_bound(kcbs.exclusivity_graph(), 2, options.solve);
    result.claims.push_back(claim_real("two-copy exclusivity bound", kSqrt5, two_copy.bound,
                                       options.solve.tolerance));

    const Rational one_copy = alpha_star(kcbs.exclusivity_graph(), options.solve);
    result.claims.push_back(claim_rational("one-copy exclusivity bound", Rational(5, 2), one_copy));
    result.claims.push_back(claim_greater(
        "one-copy bound exceeds the two-copy bound sqrt(5)", one_copy.to_double(), two_copy.bound));

    result.witnesses["or_product"] = graph_to_json(g);
    result.witnesses["diagonal_family_00"] = diagonal(0, 0);
    result.witnesses["packing_weights"] = weights_json(lp.witness);
    result.witnesses["maximal_clique_count"] = cliques.size();
    if (!probe.ranges.empty()) {
        auto ranges = nlohmann::ordered_json::array();
        for (const auto& [lo, hi] : probe.ranges) ranges.push_back({lo.str(), hi.str()});
        result.witnesses["probe_ranges"] = std::move(ranges);
    }
    result.witnesses["theta_c5"] = theta_witness_json(cert, true);
    result.witnesses["two_copy_clique"] = clique_witness_json(two_copy.omega_power);

    finalize(result, !two_copy.omega_power.proven, start);
    return result;
}

CheckResult verify_observation1(const VerifyOptions& options) {
    const auto start = Clock::now();
    CheckResult result;
    result.name = "observation1";

    const Scenario chsh = chsh_scenario();
    const Graph g = apply_mutation(chsh.exclusivity_graph(), options.drop_edge);
    const auto pr = pr_box_assignment();

    const auto pentagons = induced_cycles(g, 5);
    result.claims.push_back(
        claim_count("induced pentagons in the CHSH graph", 8, static_cast<long>(pentagons.size())));

    // Every CHSH event carries PR weight 1/2, so any induced pentagon is
    // a KCBS-shaped set of PR-supported events.
    std::optional<std::vector<int>> pentagon;
    for (const auto& p : pentagons) {
        bool supported = true;
        for (int v : p) supported = supported && pr[v].exact() && pr[v].rational() == Rational(1, 2);
        if (supported) {
            pentagon = p;
            break;
        }
    }
    result.claims.push_back(
        claim_true("an induced pentagon of PR weight 1/2 per event exists", pentagon.has_value()));

    Rational pentagon_sum(0);
    if (pentagon)
        for (int v : *pentagon) pentagon_sum += pr[v].rational();
    result.claims.push_back(
        claim_rational("PR weight restricted to the pentagon", Rational(5, 2), pentagon_sum));

    const auto pentagon_max = ge_copy_bound(Graph::cycle(5), 2, options.solve);
    result.claims.push_back(claim_real("two-copy pentagon maximum", kSqrt5, pentagon_max.bound,
                                       options.solve.tolerance));
    result.claims.push_back(claim_greater("PR pentagon weight exceeds the pentagon maximum",
                                          pentagon_sum.to_double(), pentagon_max.bound));

    const auto total = assignment_value(pr, chsh);
    result.claims.push_back(
        claim_rational("total PR weight over the 8 events", Rational(4), total.rational()));

    result.witnesses["graph"] = graph_to_json(g);
    result.witnesses["pentagons"] = pentagons;
    if (pentagon) result.witnesses["pentagon"] = *pentagon;
    result.witnesses["pentagon_max_clique"] = clique_witness_json(pentagon_max.omega_power);

    finalize(result, !pentagon_max.omega_power.proven, start);
    return result;
}

CheckResult verify_observation2(const VerifyOptions& options) {
    const auto start = Clock::now();
    CheckResult result;
    result.name = "observation2";
    if (options.max_power < 2)
        throw InputError("observation2 needs max power >= 2");

    const Graph m4 = Graph::circulant(8, {1, 4});
    const Graph g12 = apply_mutation(Graph::circulant(8, {1, 2}), options.drop_edge);
    bool exhausted = false;

    result.claims.push_back(claim_true("complement of the CHSH graph is isomorphic to Ci8(1,2)",
                                       find_isomorphism(complement(m4), g12).has_value()));

    const double theta_expected = 8.0 - 4.0 * std::sqrt(2.0);
    const auto cert = sdp_theta(g12, options.solve.theta);
    result.claims.push_back(claim_real("theta(Ci8(1,2))", theta_expected, cert.value,
                                       options.solve.tolerance));

    const auto capacity = shannon_bounds(g12, options.max_power, options.solve);
    for (const auto& p : capacity.per_power) exhausted = exhausted || !p.independent_set.proven;
    result.claims.push_back(claim_real("capacity lower bound from strong powers", kSqrt5,
                                       capacity.lower, options.solve.tolerance));
    result.claims.push_back(claim_real("capacity upper bound theta", theta_expected,
                                       capacity.upper, options.solve.tolerance));
    result.claims.push_back(
        claim_true("capacity interval is ordered", capacity.lower <= capacity.upper + 1e-9));

    // If Theta(Ci8(1,2)) actually met its Lovasz upper bound, infinitely
    // many copies would pin the CHSH maximum at 8/theta = 2 + sqrt(2).
    result.claims.push_back(claim_real("conditional limit 8/theta", 2.0 + std::sqrt(2.0),
                                       8.0 / cert.value, options.solve.tolerance));

    const auto one_copy = ge_copy_bound(m4, 1, options.solve);
    exhausted = exhausted || !one_copy.omega_power.proven;
    result.claims.push_back(claim_count("omega(M4)", 2, one_copy.omega_power.size));
    result.claims.push_back(
        claim_real("one-copy bound", 4.0, one_copy.bound, options.solve.tolerance));

    const auto two_copy = ge_copy_bound(m4, 2, options.solve);
    exhausted = exhausted || !two_copy.omega_power.proven;
    result.claims.push_back(
        claim_count("omega of the 64-vertex OR square", 5, two_copy.omega_power.size));
    result.claims.push_back(claim_real("two-copy bound 8/sqrt(5)", 8.0 / kSqrt5, two_copy.bound,
                                       options.solve.tolerance));

    auto ladder = nlohmann::ordered_json::array();
    for (int k = 3; k <= options.max_power; ++k) {
        const auto cb = ge_copy_bound(m4, k, options.solve);
        exhausted = exhausted || !cb.omega_power.proven;
        nlohmann::ordered_json entry;
        entry["copies"] = k;
        entry["omega_power"] = cb.omega_power.size;
        entry["proven"] = cb.omega_power.proven;
        entry["bound"] = cb.bound;
        ladder.push_back(std::move(entry));
    }

    result.witnesses["graph"] = graph_to_json(g12);
    result.witnesses["theta"] = theta_witness_json(cert, true);
    auto powers = nlohmann::ordered_json::array();
    for (const auto& p : capacity.per_power) {
        nlohmann::ordered_json entry;
        entry["power"] = p.power;
        entry["independence"] = clique_witness_json(p.independent_set);
        powers.push_back(std::move(entry));
    }
    result.witnesses["strong_powers"] = std::move(powers);
    result.witnesses["one_copy_clique"] = clique_witness_json(one_copy.omega_power);
    result.witnesses["two_copy_clique"] = clique_witness_json(two_copy.omega_power);
    if (!ladder.empty()) result.witnesses["higher_copies"] = std::move(ladder);

    finalize(result, exhausted, start);
    return result;
}

namespace {

const std::vector<std::vector<int>>& listed_members(int n) {
    static const std::vector<std::vector<int>> none;
    static const std::vector<std::vector<int>> n5{{1}};
    static const std::vector<std::vector<int>> n13{{1, 2, 6}, {1, 3, 4}};
    static const std::vector<std::vector<int>> n17{{1, 2, 3, 6}, {1, 2, 4, 8}, {1, 3, 4, 5}};
    switch (n) {
        case 5: return n5;
        case 13: return n13;
        case 17: return n17;
        default: return none;
    }
}

std::string steps_str(const std::vector<int>& steps) {
    std::string out = "(";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(steps[i]);
    }
    return out + ")";
}

}  // namespace

CheckResult verify_result2(const VerifyOptions& options) {
    const auto start = Clock::now();
    CheckResult result;
    const int n = options.family_order;
    result.name = "result2-n" + std::to_string(n);

    const auto classes = enumerate_scvt_circulants(n, options.solve);
    bool exhausted = false;

    for (const auto& member : listed_members(n)) {
        bool found = false;
        for (const auto& cls : classes)
            for (const auto& steps : cls.members) found = found || steps == member;
        result.claims.push_back(claim_true(
            "family contains the listed member Ci" + std::to_string(n) + steps_str(member),
            found));
    }
    if (n == 13)
        result.claims.push_back(
            claim_count("isomorphism classes on 13 vertices", 2, static_cast<long>(classes.size())));
    if (classes.empty())
        result.claims.push_back(claim_count(
            "self-complementary circulant classes on " + std::to_string(n) + " vertices", 0, 0));

    const double sqrt_order = std::sqrt(static_cast<double>(n));
    auto class_reports = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        Graph g = Graph::circulant(n, cls.representative);
        if (c == 0) g = apply_mutation(g, options.drop_edge);
        const std::string tag = "Ci" + std::to_string(n) + steps_str(cls.representative);

        const auto check = result2_check(g, options.solve);
        exhausted = exhausted || !check.proven;
        result.claims.push_back(claim_true(tag + " is self-complementary", check.self_complementary));
        result.claims.push_back(claim_true(tag + " is vertex-transitive", check.vertex_transitive));
        result.claims.push_back(
            claim_true(tag + " order is not the square of a prime", check.order_not_prime_square));
        result.claims.push_back(
            claim_true(tag + " classical bound below theta", check.alpha_below_theta));
        result.claims.push_back(claim_real(tag + " theta", sqrt_order, check.theta,
                                           options.solve.tolerance));
        result.claims.push_back(claim_count(tag + " omega of the two-copy OR square", n,
                                            check.two_copy.omega_power.size));
        result.claims.push_back(claim_real(tag + " two-copy bound", sqrt_order,
                                           check.two_copy.bound, options.solve.tolerance));

        nlohmann::ordered_json report;
        report["representative"] = cls.representative;
        report["members"] = cls.members;
        report["independence"] = check.independence.str();
        report["theta"] = check.theta;
        report["two_copy_clique"] = clique_witness_json(check.two_copy.omega_power);
        class_reports.push_back(std::move(report));
    }
    result.witnesses["classes"] = std::move(class_reports);

    finalize(result, exhausted, start);
    return result;
}

nlohmann::ordered_json check_to_json(const CheckResult& result) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["name"] = result.name;
    j["verdict"] = verdict_str(result.verdict);
    j["seconds"] = result.seconds;
    auto claims = nlohmann::ordered_json::array();
    for (const auto& c : result.claims) {
        nlohmann::ordered_json jc;
        jc["description"] = c.description;
        jc["expected"] = c.expected;
        jc["computed"] = c.computed;
        if (c.tolerance > 0) jc["tolerance"] = c.tolerance;
        jc["holds"] = c.holds;
        claims.push_back(std::move(jc));
    }
    j["claims"] = std::move(claims);
    j["witnesses"] = result.witnesses;
    return j;
}

std::string check_to_text(const CheckResult& result) {
    std::string out = "[" + verdict_str(result.verdict) + "] " + result.name + " (" +
                      format_real(result.seconds) + " s)\n";
    for (const auto& c : result.claims) {
        out += c.holds ? "  ok    " : "  FAIL  ";
        out += c.description + ": expected " + c.expected + ", got " + c.computed;
        if (c.tolerance > 0) out += " (tol " + format_real(c.tolerance) + ")";
        out += "\n";
    }
    return out;
}

}  // namespace exgraph
