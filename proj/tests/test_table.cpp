#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "rinv/reference.hpp"
#include "rinv/table.hpp"
#include "rinv/verify.hpp"

using namespace rinv;

TEST_CASE("text tables") {
    const auto t = compute_table(Mode::Avoid, Pattern::parse("132"), 2, Backend::Formula, 10);
    CHECK(format_table(t, TableFormat::Text) == "1\n0 1\n1 0 1\n");
    const auto big = compute_table(Mode::Avoid, Pattern::parse("123"), 8, Backend::Formula, 10);
    CHECK(format_table(big, TableFormat::Text).ends_with("35 0 35 0 0 0 0 0 0\n"));
}

TEST_CASE("csv and json tables") {
    const auto t = compute_table(Mode::ContainOnce, Pattern::parse("321"), 3, Backend::Oracle, 10);
    CHECK(format_table(t, TableFormat::Csv) == "n,0,1,2,3\n0,0,,,\n1,0,0,,\n2,0,0,0,\n3,0,1,0,0\n");
    const auto j = nlohmann::json::parse(format_table(t, TableFormat::Json));
    CHECK(j["stat"] == "once");
    CHECK(j["pattern"] == "321");
    CHECK(j["rows"].size() == 4);
    CHECK(j["rows"][3][1] == 1);
    CHECK(format_table(t, TableFormat::Json).rfind("{\"stat\"", 0) == 0);
}

TEST_CASE("huge values stay exact in json") {
    const auto t = compute_table(Mode::Avoid, Pattern::parse("123"), 70, Backend::Formula, 10);
    const auto j = nlohmann::json::parse(format_table(t, TableFormat::Json));
    CHECK(j["rows"][70][0].is_string());
    CHECK(j["rows"][70][0] == t.rows[70][0].str());
    CHECK(j["rows"][3][1].is_number_unsigned());
}

TEST_CASE("table errors") {
    CHECK_THROWS_AS(compute_table(Mode::Avoid, Pattern::parse("1234"), 3, Backend::Formula, 10), DomainError);
    CHECK_THROWS_AS(compute_table(Mode::Avoid, Pattern::parse("12"), 3, Backend::Formula, 10), DomainError);
    CHECK_THROWS_AS(compute_table(Mode::Avoid, Pattern::parse("123"), 11, Backend::Oracle, 10), DomainError);
    CHECK_THROWS_AS(compute_table(Mode::Avoid, Pattern::parse("123"), -1, Backend::Formula, 10), DomainError);
    CHECK_THROWS_AS(parse_table_format("xml"), DomainError);
}

TEST_CASE("reference tables are triangular and complete") {
    const auto& tables = reference_tables();
    CHECK(tables.size() == 7);
    std::size_t avoid = 0, once = 0;
    for (const auto& t : tables) {
        REQUIRE(t.rows.size() == 9);
        for (std::size_t n = 0; n < t.rows.size(); ++n) CHECK(t.rows[n].size() == n + 1);
        (t.mode == Mode::Avoid ? avoid : once) += t.patterns.size();
    }
    CHECK(avoid == 6);
    CHECK(once == 6);
    CHECK(s6_cycle_table().size() == 11);
}

TEST_CASE("verify sections") {
    CHECK(parse_section("cycles") == Section::Cycles);
    CHECK_THROWS_AS(parse_section("everything"), DomainError);
    CHECK(all_sections().size() == 5);

    const auto trivial = run_verify(0, all_sections());
    CHECK(trivial.passed());

    const auto full = run_verify(8, all_sections());
    CHECK(full.passed());
    CHECK(full.str().find("S6 cycle table: 2^14^1 gives 20 vs 18") != std::string::npos);

    const auto bij = run_verify(6, {Section::Bijections});
    CHECK(bij.passed());
    CHECK(bij.checks.size() == 8);
    CHECK_THROWS_AS(run_verify(-1, all_sections()), DomainError);
}

TEST_CASE("reports name the first failing cell") {
    VerifyReport r;
    r.checks.push_back(CheckResult{"ok", 3, {}, {}});
    r.checks.push_back(CheckResult{"broken", 2, {"n=4 k=2: 3 != 5"}, {}});
    CHECK_FALSE(r.passed());
    CHECK(r.str() == "PASS ok (3 cells)\nFAIL broken (2 cells, 1 failures; first: n=4 k=2: 3 != 5)\nFAILED: 1 of 2 checks\n");
}
