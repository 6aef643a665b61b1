#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "exgraph/invariants.hpp"

namespace exgraph {

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_str(Verdict v);

struct Claim {
    std::string description;
    std::string expected;
    std::string computed;
    double tolerance = 0.0;  // 0 means exact comparison
    bool holds = false;
};

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::Fail;
    std::vector<Claim> claims;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    double seconds = 0.0;
};

struct VerifyOptions {
    SolveOptions solve{};
    // verify_observation2: largest OR/strong power examined.
    int max_power = 2;
    // verify_result2: order of the circulant family.
    int family_order = 13;
    // Self-test knob: delete one exclusivity edge before checking. A
    // mutated run must come back with verdict Fail.
    std::optional<std::pair<int, int>> drop_edge;
};

// Bound triple of the KCBS pentagon against (2, sqrt 5, 5/2).
CheckResult verify_kcbs(const VerifyOptions& options = {});

// Bound triple of the CHSH scenario against (3, 2 + sqrt 2, 4).
CheckResult verify_chsh(const VerifyOptions& options = {});

// The two-copy derivation of the KCBS quantum maximum: product scenario
// graph = OR product, the 25 diagonal 5-cliques, alpha* = 5 with the
// forced uniform 1/5 optimum, local probability 1/sqrt 5, value sqrt 5.
CheckResult verify_result1(const VerifyOptions& options = {});

// PR-box exclusion: an induced pentagon of the CHSH graph carries PR
// weight 5/2, above the two-copy pentagon maximum sqrt 5.
CheckResult verify_observation1(const VerifyOptions& options = {});

// The CHSH copy-bound ladder and the Shannon-capacity conditional:
// theta(Ci8(1,2)) = 8 - 4 sqrt 2, capacity interval, limit 2 + sqrt 2.
CheckResult verify_observation2(const VerifyOptions& options = {});

// Self-complementary circulant family on family_order vertices; each
// class must pass result2_check, and for orders 5, 13, 17 the known
// members (pentagon, Ci13(1,2,6), Paley-13, ...) must appear.
CheckResult verify_result2(const VerifyOptions& options = {});

nlohmann::ordered_json check_to_json(const CheckResult& result);
std::string check_to_text(const CheckResult& result);

}  // namespace exgraph
