// Acceptance suite: one line per criterion, exit 0 only when all pass.
// Runs against the library directly plus the CLI for exit-code checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "exgraph/assignment.hpp"
#include "exgraph/graph_io.hpp"
#include "exgraph/invariants.hpp"
#include "exgraph/verify.hpp"
#include "oracles.hpp"

using namespace exgraph;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<void(std::vector<std::string>&)> body;  // push failures
};

bool relatively_close(double value, double target, double tol) {
    return std::abs(value - target) <= tol * std::max(1.0, std::abs(target));
}

void expect(std::vector<std::string>& failures, bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
}

int cli_exit(const std::string& args) {
    const std::string cmd = std::string(EXGRAPH_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const double kSqrt5 = std::sqrt(5.0);
const double kTol = 1e-6;

void criterion_kcbs(std::vector<std::string>& failures) {
    const auto t = bound_triple(kcbs_scenario());
    expect(failures, t.classical == Rational(2), "alpha(C5) != 2");
    expect(failures, std::abs(t.quantum - kSqrt5) <= kTol * kSqrt5,
           "theta(C5) not within 1e-6 relative of sqrt(5)");
    expect(failures, t.exclusivity == Rational(5, 2), "alpha*(C5) != 5/2");
    expect(failures, t.proven, "independence search not proven");
}

void criterion_chsh(std::vector<std::string>& failures) {
    const auto t = bound_triple(chsh_scenario());
    const double tsirelson = 2.0 + std::sqrt(2.0);
    expect(failures, t.classical == Rational(3), "alpha(CHSH) != 3");
    expect(failures, std::abs(t.quantum - tsirelson) <= kTol * tsirelson,
           "theta(CHSH) not within 1e-6 relative of 2+sqrt(2)");
    expect(failures, t.exclusivity == Rational(4), "alpha*(CHSH) != 4");
}

void require_claim(std::vector<std::string>& failures, const CheckResult& r,
                   const std::string& needle) {
    for (const auto& c : r.claims) {
        if (c.description.find(needle) != std::string::npos) {
            if (!c.holds)
                failures.push_back("claim failed: " + c.description + " (expected " + c.expected +
                                   ", got " + c.computed + ")");
            return;
        }
    }
    failures.push_back("claim missing: " + needle);
}

void criterion_result1(std::vector<std::string>& failures) {
    const auto r = verify_result1();
    expect(failures, r.verdict == Verdict::Pass, "verdict " + verdict_str(r.verdict));
    require_claim(failures, r, "equals the OR product");
    require_claim(failures, r, "diagonal event families");
    require_claim(failures, r, "alpha*(C5*C5)");
    require_claim(failures, r, "unique uniform optimal weight");
    require_claim(failures, r, "local event probability");
    require_claim(failures, r, "matches theta(C5)");
    // The per-vertex LP face is wider than the uniform point; the note
    // keeps this visible (see the repo notes on the probe).
    for (const auto& c : r.claims)
        if (c.description.find("probe verdict") != std::string::npos)
            std::cout << "      note: per-vertex probe on the optimal face reports '"
                      << c.computed << "'\n";
}

void criterion_observation1(std::vector<std::string>& failures) {
    const auto r = verify_observation1();
    expect(failures, r.verdict == Verdict::Pass, "verdict " + verdict_str(r.verdict));
    require_claim(failures, r, "induced pentagons");
    require_claim(failures, r, "PR weight restricted");
    require_claim(failures, r, "exceeds the pentagon maximum");
}

void criterion_observation2(std::vector<std::string>& failures) {
    const auto r = verify_observation2();
    expect(failures, r.verdict == Verdict::Pass, "verdict " + verdict_str(r.verdict));
    require_claim(failures, r, "theta(Ci8(1,2))");
    require_claim(failures, r, "one-copy bound");
    require_claim(failures, r, "omega of the 64-vertex OR square");
    require_claim(failures, r, "two-copy bound 8/sqrt(5)");
    require_claim(failures, r, "capacity lower bound");
    require_claim(failures, r, "capacity upper bound");
    require_claim(failures, r, "conditional limit");
}

void criterion_result2(std::vector<std::string>& failures) {
    VerifyOptions options;
    options.family_order = 13;
    const auto r = verify_result2(options);
    // Inconclusive (budget) must not count as a pass.
    expect(failures, r.verdict == Verdict::Pass, "verdict " + verdict_str(r.verdict));
    require_claim(failures, r, "Ci13(1,2,6)");
    require_claim(failures, r, "Ci13(1,3,4)");
    require_claim(failures, r, "isomorphism classes on 13 vertices");
}

void criterion_properties(std::vector<std::string>& failures) {
    std::mt19937 rng(987654321);

    // Complement involution and OR/strong De Morgan duality.
    int involution_rounds = 0, demorgan_rounds = 0;
    for (int round = 0; round < 120; ++round) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(rng, n, 0.2 + 0.2 * (round % 4));
        if (!(complement(complement(g)) == g)) {
            failures.push_back("complement involution failed");
            return;
        }
        ++involution_rounds;
        const int k = 1 + static_cast<int>(rng() % 3);
        if (!(or_power(g, k) == complement(strong_power(complement(g), k)))) {
            failures.push_back("De Morgan duality failed");
            return;
        }
        ++demorgan_rounds;
    }
    expect(failures, involution_rounds >= 100 && demorgan_rounds >= 100,
           "fewer than 100 property rounds");

    // alpha(g*h) = alpha(g) alpha(h): factor alphas by brute force; the
    // product side by full subset scan when it fits, else by the exact
    // solver (which criterion 7 also validates against the scan below).
    for (int round = 0; round < 50; ++round) {
        const Graph a = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.4);
        const Graph b = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.4);
        const Graph product = or_product(a, b);
        const int expected =
            oracle::max_independent_size(a) * oracle::max_independent_size(b);
        const int got = product.order() <= 20 ? oracle::max_independent_size(product)
                                              : max_independent_set(product).size;
        if (got != expected) {
            failures.push_back("or-product independence multiplicativity failed");
            return;
        }
    }

    // Solver agrees with exhaustive enumeration on >= 500 random graphs.
    for (int round = 0; round < 500; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const double p = 0.1 + 0.1 * static_cast<double>(rng() % 9);
        const Graph g = oracle::random_graph(rng, n, p);
        if (max_clique(g).size != oracle::max_clique_size(g)) {
            failures.push_back("max_clique disagrees with exhaustive search");
            return;
        }
        if (max_independent_set(g).size != oracle::max_independent_size(g)) {
            failures.push_back("max_independent_set disagrees with exhaustive search");
            return;
        }
    }

    // SDP certificates and the sandwich ordering on every test graph.
    std::vector<Graph> graphs{Graph::cycle(5),
                              Graph::circulant(8, {1, 4}),
                              Graph::circulant(8, {1, 2}),
                              Graph::circulant(13, {1, 2, 6}),
                              Graph::circulant(13, {1, 3, 4}),
                              Graph::complete(6),
                              Graph::edgeless(5),
                              or_product(Graph::cycle(5), Graph::cycle(5))};
    for (int round = 0; round < 40; ++round)
        graphs.push_back(oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.35));

    for (const auto& g : graphs) {
        const auto cert = sdp_theta(g);
        if (cert.max_edge_entry > 1e-6 || cert.max_edge_residual > 1e-6) {
            failures.push_back("SDP certificate residual above 1e-6");
            return;
        }
        const auto alpha_result = max_independent_set(g);
        const auto packing = alpha_star(g);
        if (!(static_cast<double>(alpha_result.size) <= cert.value + kTol &&
              cert.value <= packing.to_double() + 2 * kTol)) {
            failures.push_back("sandwich ordering alpha <= theta <= alpha* violated");
            return;
        }
    }
}

void criterion_failpath(std::vector<std::string>& failures) {
    const std::vector<std::string> verifiers{"kcbs",         "chsh",         "result1",
                                             "observation1", "observation2", "result2"};
    for (const auto& v : verifiers) {
        const int code = cli_exit("verify " + v + " --mutate-drop-edge 0,1");
        if (code != 1) {
            failures.push_back("verify " + v + " --mutate-drop-edge 0,1 exited " +
                               std::to_string(code) + ", want 1");
        }
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "KCBS triple (2, sqrt5, 5/2)", 5.0, criterion_kcbs},
        {2, "CHSH triple (3, 2+sqrt2, 4)", 5.0, criterion_chsh},
        {3, "Result 1 two-copy chain", 30.0, criterion_result1},
        {4, "Observation 1 PR-box exclusion", 10.0, criterion_observation1},
        {5, "Observation 2 copy bounds and capacity interval", 120.0, criterion_observation2},
        {6, "Result 2 circulant family n=13", 600.0, criterion_result2},
        {7, "Property suites", 600.0, criterion_properties},
        {8, "Verifier fail paths exit 1", 120.0, criterion_failpath},
    };

    int passed = 0;
    for (const auto& c : criteria) {
        std::vector<std::string> failures;
        const auto start = Clock::now();
        try {
            c.body(failures);
        } catch (const std::exception& e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (seconds > c.time_limit_s)
            failures.push_back("runtime " + std::to_string(seconds) + "s exceeds " +
                               std::to_string(c.time_limit_s) + "s");
        const bool ok = failures.empty();
        passed += ok ? 1 : 0;
        std::printf("[%d/8] %s  %s (%.2f s)\n", c.id, ok ? "PASS" : "FAIL", c.name.c_str(),
                    seconds);
        for (const auto& f : failures) std::printf("      - %s\n", f.c_str());
    }
    std::printf("acceptance: %d/8 criteria passed\n", passed);
    return passed == 8 ? 0 : 1;
}
