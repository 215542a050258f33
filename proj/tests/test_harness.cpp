#include "doctest.h"
#include "orthoperm/harness.hpp"

#include "json.hpp"

using namespace orthoperm;

TEST_CASE("minus-4 at l = 2 passes every check") {
    Config c;
    c.family = Family::Minus;
    c.m = 4;
    c.ell = 2;
    const StructureReport r = run_verification(c);
    for (const auto& ch : r.checks) CHECK_MESSAGE(ch.pass, ch.name << ": " << ch.detail);
    CHECK(r.passed());
    REQUIRE(r.orbits.size() == 2);
    CHECK(r.orbits[0].points == 15);
}

TEST_CASE("reports are deterministic and carry the documented keys") {
    Config c;
    c.family = Family::Minus;
    c.m = 6;
    c.ell = 5;
    c.rational = false;
    const std::string a = to_json(run_verification(c)), b = to_json(run_verification(c));
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    for (const char* k : {"config", "table", "parameters", "roots", "dims", "factors", "socle_series", "head",
                          "summands", "checks", "passed", "timings"})
        CHECK_MESSAGE(j.contains(k), k);
    CHECK(j["timings"].empty());
    CHECK(j["parameters"].contains("+1"));
}

TEST_CASE("unsupported configurations are rejected") {
    Config c;
    c.ell = 3;
    CHECK_THROWS_AS(validate(c), UnsupportedConfig);
    c.ell = 9;
    CHECK_THROWS_AS(validate(c), UnsupportedConfig);
    c.ell = 5;
    c.family = Family::Minus;
    c.m = 4;
    CHECK_THROWS_AS(validate(c), UnsupportedConfig);
    c.ell = 2;
    c.family = Family::Odd;
    c.m = 9;
    CHECK_THROWS_AS(validate(c), UnsupportedConfig);
}
