#include <doctest.h>

#include "exgraph/errors.hpp"
#include "exgraph/verify.hpp"

using namespace exgraph;

namespace {

void strip_timings(nlohmann::ordered_json& j) {
    if (j.is_object()) {
        j.erase("seconds");
        for (auto& [key, value] : j.items()) strip_timings(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_timings(value);
    }
}

nlohmann::ordered_json stable_part(const CheckResult& r) {
    auto j = check_to_json(r);
    strip_timings(j);
    return j;
}

}  // namespace

TEST_CASE("all verifiers pass on the intact inputs") {
    CHECK(verify_kcbs().verdict == Verdict::Pass);
    CHECK(verify_chsh().verdict == Verdict::Pass);
    CHECK(verify_observation1().verdict == Verdict::Pass);
    CHECK(verify_observation2().verdict == Verdict::Pass);
    CHECK(verify_result2().verdict == Verdict::Pass);  // n = 13
}

TEST_CASE("result1 chain passes and records the face shape") {
    const auto r = verify_result1();
    CHECK(r.verdict == Verdict::Pass);
    bool saw_probe = false;
    for (const auto& c : r.claims) {
        if (c.description.find("probe verdict") != std::string::npos) {
            saw_probe = true;
            CHECK(c.computed == "multiple");
        }
    }
    CHECK(saw_probe);
}

TEST_CASE("each verifier fails under an edge-drop mutation") {
    VerifyOptions mutated;
    mutated.drop_edge = {0, 1};
    CHECK(verify_kcbs(mutated).verdict == Verdict::Fail);
    CHECK(verify_chsh(mutated).verdict == Verdict::Fail);
    CHECK(verify_result1(mutated).verdict == Verdict::Fail);
    CHECK(verify_observation1(mutated).verdict == Verdict::Fail);
    CHECK(verify_observation2(mutated).verdict == Verdict::Fail);
    CHECK(verify_result2(mutated).verdict == Verdict::Fail);
}

TEST_CASE("a failing claim is reported, not hidden") {
    VerifyOptions mutated;
    mutated.drop_edge = {0, 1};
    const auto r = verify_kcbs(mutated);
    bool some_failed = false;
    for (const auto& c : r.claims) some_failed = some_failed || !c.holds;
    CHECK(some_failed);
    const auto text = check_to_text(r);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("[fail]") != std::string::npos);
}

TEST_CASE("mutating a non-edge is an input error") {
    VerifyOptions bad;
    bad.drop_edge = {0, 2};  // C5 has no chord
    CHECK_THROWS_AS(verify_kcbs(bad), InputError);
}

TEST_CASE("verifier reports are reproducible") {
    CHECK(stable_part(verify_kcbs()) == stable_part(verify_kcbs()));
    CHECK(stable_part(verify_observation1()) == stable_part(verify_observation1()));
}

TEST_CASE("report json carries the schema tag") {
    const auto j = check_to_json(verify_kcbs());
    CHECK(j.at("schema") == "1");
    CHECK(j.at("verdict") == "pass");
    CHECK(j.at("claims").is_array());
    CHECK_FALSE(j.at("claims").empty());
}
