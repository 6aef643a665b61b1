#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "exgraph/assignment.hpp"
#include "exgraph/errors.hpp"
#include "exgraph/graph_io.hpp"
#include "exgraph/invariants.hpp"
#include "exgraph/verify.hpp"

namespace {

using namespace exgraph;

// Exit codes: 0 success/pass, 1 verification failure, 2 input error,
// 3 resource or budget exhaustion.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct GlobalOptions {
    std::string format = "text";  // text | json | dot
    std::string out_path;
    double tolerance = 1e-6;
    double budget_seconds = 60.0;
    int size_cap = kDefaultProductOrderCap;
    int iso_cap = kDefaultIsoOrderCap;
};

SolveOptions make_solve_options(const GlobalOptions& g) {
    SolveOptions s;
    s.budget.limit = std::chrono::milliseconds(static_cast<long long>(g.budget_seconds * 1000));
    s.theta.tol = g.tolerance / 10.0;
    s.tolerance = g.tolerance;
    s.product_order_cap = g.size_cap;
    s.iso_order_cap = g.iso_cap;
    return s;
}

void emit(const GlobalOptions& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_path);
    if (!out) throw InputError("cannot write to " + g.out_path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }
Scenario load_scenario(const std::string& path) { return parse_scenario(slurp(path)); }
ProbabilityAssignment load_assignment(const std::string& path) {
    return parse_assignment(slurp(path));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("bad integer list entry: " + item);
        }
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

std::optional<std::pair<int, int>> parse_edge_option(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto items = parse_int_list(text);
    if (items.size() != 2) throw InputError("edge option needs exactly two vertices");
    return std::pair{items[0], items[1]};
}

std::string graph_text(const Graph& g) {
    std::ostringstream os;
    os << "graph: order=" << g.order() << " edges=" << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) {
        os << "  " << u << " -- " << v;
        if (g.has_labels()) os << "   " << g.label(u) << " | " << g.label(v);
        os << "\n";
    }
    return os.str();
}

int emit_graph(const GlobalOptions& g, const Graph& graph) {
    if (g.format == "json")
        emit(g, graph_to_json_string(graph));
    else if (g.format == "dot")
        emit(g, graph_to_dot(graph));
    else
        emit(g, graph_text(graph));
    return kExitPass;
}

int emit_scenario(const GlobalOptions& g, const Scenario& s) {
    if (g.format == "dot") throw InputError("scenarios have no DOT form");
    if (g.format == "json") {
        emit(g, scenario_to_json_string(s));
    } else {
        std::ostringstream os;
        os << "scenario " << s.name() << ": " << s.size() << " events\n";
        for (const auto& e : s.events()) os << "  " << e.label() << "\n";
        emit(g, os.str());
    }
    return kExitPass;
}

int emit_report(const GlobalOptions& g, const nlohmann::ordered_json& report,
                const std::string& text, int exit_code = kExitPass) {
    if (g.format == "dot") throw InputError("reports have no DOT form");
    if (g.format == "json")
        emit(g, report.dump(2) + "\n");
    else
        emit(g, text);
    return exit_code;
}

nlohmann::ordered_json report_header(const std::string& kind) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["report"] = kind;
    return j;
}

int run_verify(const GlobalOptions& g, const CheckResult& result) {
    const int code = result.verdict == Verdict::Pass   ? kExitPass
                     : result.verdict == Verdict::Fail ? kExitFail
                                                       : kExitResource;
    return emit_report(g, check_to_json(result), check_to_text(result), code);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exclusivity-graph bounds for noncontextuality inequalities"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "output format: text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--out", global.out_path, "write output to a file instead of stdout");
    app.add_option("--tolerance", global.tolerance, "relative tolerance for real comparisons")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", global.budget_seconds, "clique-search budget in seconds")
        ->check(CLI::PositiveNumber);
    app.add_option("--size-cap", global.size_cap, "maximum product graph order")
        ->check(CLI::PositiveNumber);
    app.add_option("--iso-cap", global.iso_cap, "maximum order for isomorphism searches")
        ->check(CLI::PositiveNumber);

    int result_code = kExitPass;
    auto run = [&](auto&& fn) {
        return [&result_code, fn]() { result_code = fn(); };
    };

    // ---- graph ----
    auto* graph_cmd = app.add_subcommand("graph", "construct and inspect graphs");
    graph_cmd->require_subcommand(1);

    auto* graph_make = graph_cmd->add_subcommand("make", "graph constructors");
    graph_make->require_subcommand(1);
    {
        auto* c = graph_make->add_subcommand("circulant", "circulant graph Ci_n(steps)");
        auto n = std::make_shared<int>(0);
        auto steps = std::make_shared<std::string>();
        c->add_option("--n", *n, "vertex count")->required();
        c->add_option("--steps", *steps, "comma-separated steps, e.g. 1,4")->required();
        c->callback(run([&global, n, steps] {
            return emit_graph(global, Graph::circulant(*n, parse_int_list(*steps)));
        }));

        auto* cy = graph_make->add_subcommand("cycle", "cycle graph C_n");
        auto cn = std::make_shared<int>(0);
        cy->add_option("--n", *cn, "vertex count")->required();
        cy->callback(run([&global, cn] { return emit_graph(global, Graph::cycle(*cn)); }));

        auto* k = graph_make->add_subcommand("complete", "complete graph K_n");
        auto kn = std::make_shared<int>(0);
        k->add_option("--n", *kn, "vertex count")->required();
        k->callback(run([&global, kn] { return emit_graph(global, Graph::complete(*kn)); }));
    }

    auto* graph_op = graph_cmd->add_subcommand("op", "graph operations");
    graph_op->require_subcommand(1);
    {
        auto path1 = std::make_shared<std::string>();
        auto path2 = std::make_shared<std::string>();
        auto power = std::make_shared<int>(1);

        auto* comp = graph_op->add_subcommand("complement", "complement graph");
        comp->add_option("--graph", *path1, "graph JSON file")->required();
        comp->callback(run([&global, path1] {
            return emit_graph(global, complement(load_graph(*path1)));
        }));

        auto add_product = [&](const char* name, const char* help, auto fn) {
            auto* cmd = graph_op->add_subcommand(name, help);
            cmd->add_option("--graph", *path1, "left operand graph JSON")->required();
            cmd->add_option("--graph2", *path2, "right operand graph JSON")->required();
            cmd->callback(run([&global, path1, path2, fn] {
                return emit_graph(global,
                                  fn(load_graph(*path1), load_graph(*path2), global.size_cap));
            }));
        };
        add_product("or-product", "OR (co-normal) product",
                    [](const Graph& a, const Graph& b, int cap) { return or_product(a, b, cap); });
        add_product("strong-product", "strong product",
                    [](const Graph& a, const Graph& b, int cap) { return strong_product(a, b, cap); });

        auto add_power = [&](const char* name, const char* help, auto fn) {
            auto* cmd = graph_op->add_subcommand(name, help);
            cmd->add_option("--graph", *path1, "graph JSON file")->required();
            cmd->add_option("--n", *power, "exponent")->required();
            cmd->callback(run([&global, path1, power, fn] {
                return emit_graph(global, fn(load_graph(*path1), *power, global.size_cap));
            }));
        };
        add_power("or-power", "iterated OR product",
                  [](const Graph& a, int n, int cap) { return or_power(a, n, cap); });
        add_power("strong-power", "iterated strong product",
                  [](const Graph& a, int n, int cap) { return strong_power(a, n, cap); });
    }

    auto* graph_test = graph_cmd->add_subcommand("test", "structural predicates");
    graph_test->require_subcommand(1);
    {
        auto path1 = std::make_shared<std::string>();
        auto path2 = std::make_shared<std::string>();
        auto cycle_len = std::make_shared<int>(5);

        auto* iso = graph_test->add_subcommand("isomorphic", "isomorphism with witness");
        iso->add_option("--graph", *path1, "graph JSON file")->required();
        iso->add_option("--graph2", *path2, "graph JSON file")->required();
        iso->callback(run([&global, path1, path2] {
            const auto witness =
                find_isomorphism(load_graph(*path1), load_graph(*path2), global.iso_cap);
            auto j = report_header("isomorphic");
            j["isomorphic"] = witness.has_value();
            if (witness) j["mapping"] = *witness;
            std::string text = witness ? "isomorphic\n" : "not isomorphic\n";
            return emit_report(global, j, text, witness ? kExitPass : kExitFail);
        }));

        auto* vt = graph_test->add_subcommand("vertex-transitive", "vertex transitivity with orbits");
        vt->add_option("--graph", *path1, "graph JSON file")->required();
        vt->callback(run([&global, path1] {
            const auto orbits = automorphism_orbits(load_graph(*path1), global.iso_cap);
            auto j = report_header("vertex-transitive");
            j["vertex_transitive"] = orbits.single_orbit();
            j["orbits"] = orbits.orbits;
            std::ostringstream os;
            os << (orbits.single_orbit() ? "vertex-transitive" : "not vertex-transitive") << "\n";
            for (const auto& orbit : orbits.orbits) {
                os << "  orbit:";
                for (int v : orbit) os << " " << v;
                os << "\n";
            }
            return emit_report(global, j, os.str(),
                               orbits.single_orbit() ? kExitPass : kExitFail);
        }));

        auto* sc = graph_test->add_subcommand("self-complementary", "self-complementarity");
        sc->add_option("--graph", *path1, "graph JSON file")->required();
        sc->callback(run([&global, path1] {
            const bool yes = is_self_complementary(load_graph(*path1), global.iso_cap);
            auto j = report_header("self-complementary");
            j["self_complementary"] = yes;
            return emit_report(global, j, yes ? "self-complementary\n" : "not self-complementary\n",
                               yes ? kExitPass : kExitFail);
        }));

        auto* pent = graph_test->add_subcommand("pentagons", "induced cycles (default length 5)");
        pent->add_option("--graph", *path1, "graph JSON file")->required();
        pent->add_option("--k", *cycle_len, "cycle length");
        pent->callback(run([&global, path1, cycle_len] {
            const auto cycles = induced_cycles(load_graph(*path1), *cycle_len, global.iso_cap);
            auto j = report_header("pentagons");
            j["k"] = *cycle_len;
            j["count"] = cycles.size();
            j["cycles"] = cycles;
            std::ostringstream os;
            os << cycles.size() << " induced " << *cycle_len << "-cycles\n";
            for (const auto& c : cycles) {
                os << " ";
                for (int v : c) os << " " << v;
                os << "\n";
            }
            return emit_report(global, j, os.str());
        }));
    }

    // ---- scenario ----
    auto* scenario_cmd = app.add_subcommand("scenario", "measurement scenarios");
    scenario_cmd->require_subcommand(1);
    {
        auto* build = scenario_cmd->add_subcommand("build", "built-in scenarios");
        build->require_subcommand(1);
        build->add_subcommand("kcbs", "the 5-event KCBS scenario")
            ->callback(run([&global] { return emit_scenario(global, kcbs_scenario()); }));
        build->add_subcommand("chsh", "the 8-event CHSH scenario")
            ->callback(run([&global] { return emit_scenario(global, chsh_scenario()); }));

        auto file1 = std::make_shared<std::string>();
        auto file2 = std::make_shared<std::string>();

        auto* from = scenario_cmd->add_subcommand("from-file", "parse and validate a scenario");
        from->add_option("--file", *file1, "scenario JSON file")->required();
        from->callback(run([&global, file1] {
            return emit_scenario(global, load_scenario(*file1));
        }));

        auto* prod = scenario_cmd->add_subcommand("product", "product of two scenarios");
        prod->add_option("--file", *file1, "left scenario JSON")->required();
        prod->add_option("--file2", *file2, "right scenario JSON")->required();
        prod->callback(run([&global, file1, file2] {
            return emit_scenario(
                global, product_scenario(load_scenario(*file1), load_scenario(*file2),
                                         global.size_cap));
        }));

        auto* excl = scenario_cmd->add_subcommand("exclusivity-graph", "exclusivity graph");
        excl->add_option("--file", *file1, "scenario JSON file")->required();
        excl->callback(run([&global, file1] {
            return emit_graph(global, load_scenario(*file1).exclusivity_graph());
        }));
    }

    // ---- assignment ----
    auto* assign_cmd = app.add_subcommand("assignment", "probability assignments");
    assign_cmd->require_subcommand(1);
    {
        auto scenario_path = std::make_shared<std::string>();
        auto weights_path = std::make_shared<std::string>();
        auto weights2_path = std::make_shared<std::string>();
        auto subset = std::make_shared<std::string>();

        assign_cmd->add_subcommand("pr-box", "the PR-box assignment on the CHSH events")
            ->callback(run([&global] {
                if (global.format == "json")
                    emit(global, assignment_to_json_string(pr_box_assignment()));
                else
                    emit(global, "weights: 1/2 on each of the 8 CHSH events\n");
                return kExitPass;
            }));

        auto* check = assign_cmd->add_subcommand("check-e", "exclusivity-principle check");
        check->add_option("--scenario", *scenario_path, "scenario JSON file")->required();
        check->add_option("--weights", *weights_path, "assignment JSON file")->required();
        check->callback(run([&global, scenario_path, weights_path] {
            const auto scenario = load_scenario(*scenario_path);
            const auto weights = load_assignment(*weights_path);
            const auto check_result = check_exclusivity(weights, scenario);
            auto j = report_header("check-e");
            j["admissible"] = check_result.admissible;
            std::ostringstream os;
            if (check_result.admissible) {
                os << "admissible: every clique weighs at most 1\n";
            } else {
                j["violating_clique"] = check_result.violating_clique;
                j["clique_sum"] = check_result.clique_sum.str();
                os << "violated: clique {";
                for (std::size_t i = 0; i < check_result.violating_clique.size(); ++i)
                    os << (i ? "," : "") << check_result.violating_clique[i];
                os << "} weighs " << check_result.clique_sum.str() << "\n";
            }
            return emit_report(global, j, os.str(),
                               check_result.admissible ? kExitPass : kExitFail);
        }));

        auto* value = assign_cmd->add_subcommand("value", "sum of weights over a subset");
        value->add_option("--scenario", *scenario_path, "scenario JSON file")->required();
        value->add_option("--weights", *weights_path, "assignment JSON file")->required();
        value->add_option("--subset", *subset, "comma-separated event indices (default all)");
        value->callback(run([&global, scenario_path, weights_path, subset] {
            const auto scenario = load_scenario(*scenario_path);
            const auto weights = load_assignment(*weights_path);
            Weight v;
            if (subset->empty()) {
                v = assignment_value(weights, scenario);
            } else {
                const auto idx = parse_int_list(*subset);
                v = assignment_value(weights, scenario, std::span<const int>(idx));
            }
            auto j = report_header("value");
            j["value"] = v.str();
            return emit_report(global, j, "value: " + v.str() + "\n");
        }));

        auto* prod = assign_cmd->add_subcommand("product", "product of two assignments");
        prod->add_option("--weights", *weights_path, "left assignment JSON")->required();
        prod->add_option("--weights2", *weights2_path, "right assignment JSON")->required();
        prod->callback(run([&global, weights_path, weights2_path] {
            const auto product =
                product_assignment(load_assignment(*weights_path), load_assignment(*weights2_path));
            emit(global, assignment_to_json_string(product));
            return kExitPass;
        }));
    }

    // ---- invariant ----
    auto* inv_cmd = app.add_subcommand("invariant", "graph invariants");
    inv_cmd->require_subcommand(1);
    {
        auto graph_path = std::make_shared<std::string>();
        auto scenario_path = std::make_shared<std::string>();
        auto copies = std::make_shared<int>(2);
        auto max_power = std::make_shared<int>(2);

        auto load_for = [](const std::string& graph_file, const std::string& scenario_file) {
            if (!graph_file.empty() && !scenario_file.empty())
                throw InputError("give either --graph or --scenario, not both");
            if (!graph_file.empty()) return load_graph(graph_file);
            if (!scenario_file.empty())
                return load_scenario(scenario_file).exclusivity_graph();
            throw InputError("an input graph is required: --graph FILE or --scenario FILE");
        };

        auto add_simple = [&](const char* name, const char* help, auto fn) {
            auto* cmd = inv_cmd->add_subcommand(name, help);
            cmd->add_option("--graph", *graph_path, "graph JSON file");
            cmd->add_option("--scenario", *scenario_path, "scenario JSON file");
            cmd->callback(run([&global, graph_path, scenario_path, load_for, fn, name] {
                const Graph g = load_for(*graph_path, *scenario_path);
                auto j = report_header(name);
                j["graph"] = graph_to_json(g);
                const std::string value = fn(g, make_solve_options(global), j);
                j["value"] = value;
                return emit_report(global, j, std::string(name) + ": " + value + "\n");
            }));
        };

        add_simple("alpha", "independence number (classical bound)",
                   [](const Graph& g, const SolveOptions& s, nlohmann::ordered_json& j) {
                       const auto r = max_independent_set(g, s.budget);
                       if (!r.proven) throw ResourceError("independence search exhausted budget");
                       j["witness"] = r.witness;
                       return std::to_string(r.size);
                   });
        add_simple("omega", "clique number",
                   [](const Graph& g, const SolveOptions& s, nlohmann::ordered_json& j) {
                       const auto r = max_clique(g, s.budget);
                       if (!r.proven) throw ResourceError("clique search exhausted budget");
                       j["witness"] = r.witness;
                       return std::to_string(r.size);
                   });
        add_simple("theta", "Lovasz number (quantum bound)",
                   [](const Graph& g, const SolveOptions& s, nlohmann::ordered_json& j) {
                       const auto cert = sdp_theta(g, s.theta);
                       j["gap"] = cert.gap;
                       j["iterations"] = cert.iterations;
                       return format_real(cert.value);
                   });
        add_simple("alphastar", "fractional packing number (exclusivity bound)",
                   [](const Graph& g, const SolveOptions& s, nlohmann::ordered_json&) {
                       return alpha_star(g, s).str();
                   });
        add_simple("uniqueness", "uniqueness of the alpha* optimum",
                   [](const Graph& g, const SolveOptions& s, nlohmann::ordered_json& j) {
                       const auto probe = uniqueness_probe(g, s);
                       j["alphastar"] = probe.optimum.str();
                       if (probe.unique) {
                           auto arr = nlohmann::ordered_json::array();
                           for (const auto& w : probe.forced) arr.push_back(w.str());
                           j["forced_weights"] = std::move(arr);
                       }
                       return std::string(probe.unique ? "unique" : "multiple");
                   });

        auto* triple = inv_cmd->add_subcommand("triple", "classical/quantum/exclusivity bounds");
        triple->add_option("--graph", *graph_path, "graph JSON file");
        triple->add_option("--scenario", *scenario_path, "scenario JSON file");
        triple->callback(run([&global, graph_path, scenario_path, load_for] {
            const Graph g = load_for(*graph_path, *scenario_path);
            const auto t = bound_triple(g, make_solve_options(global));
            auto j = report_header("triple");
            j["graph"] = graph_to_json(g);
            j["classical"] = t.classical.str();
            j["quantum"] = format_real(t.quantum);
            j["exclusivity"] = t.exclusivity.str();
            j["proven"] = t.proven;
            std::ostringstream os;
            os << "classical " << t.classical.str() << "  quantum " << format_real(t.quantum)
               << "  exclusivity " << t.exclusivity.str() << "\n";
            return emit_report(global, j, os.str());
        }));

        auto* copy = inv_cmd->add_subcommand("copy-bound", "exclusivity bound from n copies");
        copy->add_option("--graph", *graph_path, "graph JSON file");
        copy->add_option("--scenario", *scenario_path, "scenario JSON file");
        copy->add_option("--n", *copies, "number of copies")->required();
        copy->callback(run([&global, graph_path, scenario_path, copies, load_for] {
            const Graph g = load_for(*graph_path, *scenario_path);
            const auto cb = ge_copy_bound(g, *copies, make_solve_options(global));
            auto j = report_header("copy-bound");
            j["graph"] = graph_to_json(g);
            j["copies"] = cb.copies;
            j["omega_power"] = cb.omega_power.size;
            j["proven"] = cb.omega_power.proven;
            j["max_event_probability"] = format_real(cb.max_event_probability);
            j["bound"] = format_real(cb.bound);
            j["witness"] = cb.omega_power.witness;
            std::ostringstream os;
            os << "copies " << cb.copies << "  omega " << cb.omega_power.size
               << (cb.omega_power.proven ? "" : " (lower bound only)") << "  p_n "
               << format_real(cb.max_event_probability) << "  bound " << format_real(cb.bound)
               << "\n";
            return emit_report(global, j, os.str(),
                               cb.omega_power.proven ? kExitPass : kExitResource);
        }));

        auto* capacity = inv_cmd->add_subcommand("capacity", "Shannon capacity interval");
        capacity->add_option("--graph", *graph_path, "graph JSON file");
        capacity->add_option("--scenario", *scenario_path, "scenario JSON file");
        capacity->add_option("--max-power", *max_power, "largest strong power examined");
        capacity->callback(run([&global, graph_path, scenario_path, max_power, load_for] {
            const Graph g = load_for(*graph_path, *scenario_path);
            const auto cb = shannon_bounds(g, *max_power, make_solve_options(global));
            auto j = report_header("capacity");
            j["graph"] = graph_to_json(g);
            j["lower"] = format_real(cb.lower);
            j["upper"] = format_real(cb.upper);
            auto arr = nlohmann::ordered_json::array();
            bool all_proven = true;
            for (const auto& p : cb.per_power) {
                nlohmann::ordered_json entry;
                entry["power"] = p.power;
                entry["alpha"] = p.independent_set.size;
                entry["proven"] = p.independent_set.proven;
                all_proven = all_proven && p.independent_set.proven;
                arr.push_back(std::move(entry));
            }
            j["per_power"] = std::move(arr);
            std::ostringstream os;
            os << "capacity in [" << format_real(cb.lower) << ", " << format_real(cb.upper)
               << "]\n";
            for (const auto& p : cb.per_power)
                os << "  alpha(G^" << p.power << ") = " << p.independent_set.size
                   << (p.independent_set.proven ? "" : " (lower bound only)") << "\n";
            return emit_report(global, j, os.str(), all_proven ? kExitPass : kExitResource);
        }));
    }

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "end-to-end checks of the bound derivations");
    verify_cmd->require_subcommand(1);
    {
        auto mutate = std::make_shared<std::string>();
        auto family_order = std::make_shared<int>(13);
        auto max_power = std::make_shared<int>(2);

        auto make_verify_options = [&global, mutate, family_order, max_power] {
            VerifyOptions v;
            v.solve = make_solve_options(global);
            v.family_order = *family_order;
            v.max_power = *max_power;
            v.drop_edge = parse_edge_option(*mutate);
            return v;
        };

        auto add_verify = [&](const char* name, const char* help, auto fn) {
            auto* cmd = verify_cmd->add_subcommand(name, help);
            cmd->add_option("--mutate-drop-edge", *mutate,
                            "self-test: drop exclusivity edge u,v first");
            if (std::string(name) == "result2")
                cmd->add_option("--n", *family_order, "order of the circulant family");
            if (std::string(name) == "observation2")
                cmd->add_option("--max-power", *max_power, "largest power examined (>= 2)");
            cmd->callback(run([&global, make_verify_options, fn] {
                return run_verify(global, fn(make_verify_options()));
            }));
        };

        add_verify("kcbs", "KCBS bound triple (2, sqrt 5, 5/2)", verify_kcbs);
        add_verify("chsh", "CHSH bound triple (3, 2 + sqrt 2, 4)", verify_chsh);
        add_verify("result1", "two-copy derivation of the KCBS maximum", verify_result1);
        add_verify("observation1", "PR-box exclusion via an induced pentagon", verify_observation1);
        add_verify("observation2", "CHSH copy bounds and the capacity conditional",
                   verify_observation2);
        add_verify("result2", "self-complementary vertex-transitive family", verify_result2);
    }

    // ---- enumerate ----
    auto* enum_cmd = app.add_subcommand("enumerate", "family enumeration");
    enum_cmd->require_subcommand(1);
    {
        auto order = std::make_shared<int>(13);
        auto* scvt = enum_cmd->add_subcommand("scvt", "self-complementary circulants");
        scvt->add_option("--n", *order, "vertex count")->required();
        scvt->callback(run([&global, order] {
            const auto classes = enumerate_scvt_circulants(*order, make_solve_options(global));
            auto j = report_header("scvt");
            j["n"] = *order;
            auto arr = nlohmann::ordered_json::array();
            std::ostringstream os;
            os << classes.size() << " isomorphism classes\n";
            for (const auto& cls : classes) {
                nlohmann::ordered_json entry;
                entry["representative"] = cls.representative;
                entry["members"] = cls.members;
                arr.push_back(std::move(entry));
                os << "  class";
                for (const auto& m : cls.members) {
                    os << " (";
                    for (std::size_t i = 0; i < m.size(); ++i)
                        os << (i ? "," : "") << m[i];
                    os << ")";
                }
                os << "\n";
            }
            j["classes"] = std::move(arr);
            return emit_report(global, j, os.str());
        }));
    }

    // Let the global options (--format, --out, ...) appear after any
    // subcommand.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (auto* sub : cmd->get_subcommands([](const CLI::App*) { return true; }))
            enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << " (bracket [" << e.lower() << ", "
                  << e.upper() << "])\n";
        return kExitResource;
    }
    return result_code;
}
