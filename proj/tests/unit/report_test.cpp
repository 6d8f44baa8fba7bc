#include "hqreg/report.hpp"

#include "hqreg/expression.hpp"

#include <doctest.h>

using namespace hqreg;

TEST_CASE("analysis report fields") {
    const AnalysisReport r = analyze("conj(z1) + (z1 + conj(z2))*j", DomainSpec::unit_ball());
    CHECK(r.psi_regular);
    CHECK(r.q_holomorphic);
    CHECK(r.energy == 3);
    CHECK(r.trace == 3);
    CHECK(r.symmetric);
    CHECK(r.type == ClassificationType::III_pair);
    CHECK(r.identity_residual == 0);
    CHECK(r.invariant_K == -3);
    REQUIRE(r.jacobian_rank);
    CHECK(*r.jacobian_rank == 4);
    CHECK(r.domain == "unit-ball");

    const AnalysisReport q = analyze("z1*conj(z1)", DomainSpec::ball(2));
    CHECK_FALSE(q.jacobian_rank);
    CHECK_FALSE(q.psi_regular);
    CHECK(q.identity_residual == 0);
}

TEST_CASE("JSON round trip is exact and deterministic") {
    for (const char* text : {"z1 + z2*j", "conj(z1)", "1/3*z1*conj(z1) - z2*conj(z2) + conj(z1)*conj(z2)*j",
                             "z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j", "2 + k"}) {
        const AnalysisReport r = analyze(text, DomainSpec::unit_ball());
        const std::string json = to_json(r);
        CHECK(json == to_json(analyze(text, DomainSpec::unit_ball())));
        CHECK(report_from_json(json) == r);
        CHECK(report_from_json(to_json(r, {true})) == r);
    }
}

TEST_CASE("JSON carries exact rationals and optional approximations") {
    const AnalysisReport r = analyze("z1*conj(z1) - z2*conj(z2) + conj(z1)*conj(z2)*j", DomainSpec::unit_ball());
    const std::string plain = to_json(r);
    CHECK(plain.find("\"4/3\"") != std::string::npos);
    CHECK(plain.find("approximations") == std::string::npos);
    CHECK(to_json(r, {true}).find("approximations") != std::string::npos);
}

TEST_CASE("malformed reports are rejected") {
    const std::string good = to_json(analyze("z1", DomainSpec::unit_ball()));
    std::string bad = good;
    bad.replace(bad.find("\"schema_version\": 1"), 19, "\"schema_version\": 9");
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);
}

TEST_CASE("text report") {
    const std::string t = to_text(analyze("z1 + z2*j", DomainSpec::unit_ball()));
    CHECK(t.find("II_circle") != std::string::npos);
    CHECK(t.find("E + K - I/4   0") != std::string::npos);
}
