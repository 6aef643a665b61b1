#include "exgraph/graph_io.hpp"

#include <sstream>

#include "exgraph/errors.hpp"

namespace exgraph {

nlohmann::ordered_json graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

// Compact form: graph files are edge-heavy and read better on one line.
std::string graph_to_json_string(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
        throw InputError("graph JSON needs \"order\" and \"edges\"");
    if (!j["order"].is_number_integer()) throw InputError("graph \"order\" must be an integer");
    const int n = j["order"].get<int>();
    if (n < 0) throw InputError("graph \"order\" must be nonnegative");

    Graph g(n);
    if (!j["edges"].is_array()) throw InputError("graph \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InputError("graph edge must be a pair of integers");
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        if (u == v) throw InputError("graph edge may not be a self-loop");
        if (g.adjacent(u, v)) throw InputError("duplicate graph edge");
        g.add_edge(u, v);
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw InputError("graph \"labels\" must be an array");
        std::vector<std::string> labels;
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw InputError("graph label must be a string");
            labels.push_back(l.get<std::string>());
        }
        g.set_labels(std::move(labels));
    }
    return g;
}

Graph parse_graph(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("bad graph JSON: ") + e.what());
    }
    return graph_from_json(j);
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string graph_to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (g.has_labels()) os << " [label=\"" << dot_escape(g.label(v)) << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace exgraph
