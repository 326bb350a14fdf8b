#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rinv/dyck.hpp"
#include "rinv/enumerate.hpp"
#include "rinv/formulas.hpp"

using namespace rinv;

namespace {
const Pattern p123 = Pattern::parse("123"), p132 = Pattern::parse("132"), p213 = Pattern::parse("213");
const Pattern p231 = Pattern::parse("231"), p312 = Pattern::parse("312"), p321 = Pattern::parse("321");
}  // namespace

TEST_CASE("exact helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(-3, 0) == 1);
    CHECK(binomial(-3, 1) == 0);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(60, 30) == ExactCount("118264581564861424"));
    CHECK(catalan(0) == 1);
    CHECK(catalan(4) == 14);
    CHECK(catalan(-1) == 0);
    CHECK(pow2(-2) == ExactRational(1, 4));
    CHECK(pow2(10) == 1024);
    CHECK(require_integral(ExactRational(6, 3), "x") == 2);
    CHECK_THROWS_AS(require_integral(ExactRational(3, 4), "x"), std::logic_error);
}

TEST_CASE("avoidance closed forms") {
    CHECK(i_avoid(8, 0, p123) == 35);
    CHECK(i_avoid(8, 2, p132) == 28);
    CHECK(i_avoid(8, 2, p231) == 56);
    for (int n = 0; n <= 12; ++n) CHECK(i_avoid(n, n, p231) == 1);
    CHECK(i_avoid(7, 2, p231) == 0);
    CHECK(i_avoid(0, 0, p321) == 1);

    // Frozen past the oracle range: 231 from a series expansion, 321 from
    // counting ballot words of length 16.
    CHECK(i_avoid(16, 0, p231) == 128);
    CHECK(i_avoid(16, 2, p231) == 2816);
    CHECK(i_avoid(16, 4, p312) == 9408);
    const long d16[] = {1430, 3432, 3640, 2548, 1260, 440, 104, 15, 1};
    for (int j = 0; j <= 8; ++j) CHECK(i_avoid(16, 2 * j, p321) == d16[j]);
}

TEST_CASE("single-containment closed forms") {
    CHECK(i_once(7, 3, p123) == 9);
    CHECK(i_once(8, 4, p231) == 18);
    CHECK(i_once(8, 2, p321) == 40);
    CHECK(i_once(4, 2, p231) == 1);
    CHECK(i_once(0, 0, p132) == 0);
    CHECK(i_once(16, 2, p231) == 144);
    CHECK(i_once(16, 4, p312) == 2496);
}

TEST_CASE("totals") {
    CHECK(i_avoid_total(8, p231) == 128);
    CHECK(i_avoid_total(8, p123) == 70);
    CHECK(i_avoid_total(0, p312) == 1);
    CHECK(i_once_total(8, p231) == 28);
    CHECK(i_once_total(5, p231) == 2);
    CHECK(i_once_total(4, p231) == 1);
    CHECK(i_once_total(7, p123) == 9);
    CHECK(i_once_total(8, p123) == 0);
    for (const auto& a : s3_patterns()) {
        for (int n = 0; n <= 20; ++n) {
            ExactCount avoid = 0, once = 0;
            for (int k = 0; k <= n; ++k) {
                avoid += i_avoid(n, k, a);
                once += i_once(n, k, a);
            }
            CHECK(i_avoid_total(n, a) == avoid);
            CHECK(i_once_total(n, a) == once);
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(i_avoid(4, 2, Pattern::parse("1234")), DomainError);
    CHECK_THROWS_AS(i_once(4, 2, Pattern::parse("21")), DomainError);
    CHECK_THROWS_AS(i_avoid(-1, 0, p123), DomainError);
    CHECK_THROWS_AS(i_avoid(3, 4, p123), DomainError);
    CHECK_THROWS_AS(i_avoid_total(-2, p123), DomainError);
    CHECK_THROWS_AS(parse_mode("sometimes"), DomainError);
    CHECK(parse_mode("once") == Mode::ContainOnce);
    CHECK(to_string(Mode::Avoid) == "avoid");
}

TEST_CASE("formula backend equals oracle backend, n <= 9") {
    for (const auto& a : s3_patterns())
        for (int n = 0; n <= 9; ++n) {
            for (int k = 0; k <= n; ++k)
                for (Mode m : {Mode::Avoid, Mode::ContainOnce}) {
                    const CountingStatistic s{m, a, n, k};
                    REQUIRE(evaluate(s, Backend::Formula) == evaluate(s, Backend::Oracle));
                }
            for (Mode m : {Mode::Avoid, Mode::ContainOnce}) {
                const CountingStatistic s{m, a, n, std::nullopt};
                REQUIRE(evaluate(s, Backend::Formula) == evaluate(s, Backend::Oracle));
            }
        }
    // The oracle backend also takes longer patterns.
    CHECK(evaluate({Mode::Avoid, Pattern::parse("1234"), 4, 0}, Backend::Oracle) == 3);
    CHECK(evaluate({Mode::Avoid, Pattern::parse("1234"), 4, std::nullopt}, Backend::Oracle) == 9);
    CHECK_THROWS_AS(evaluate({Mode::Avoid, Pattern::parse("1234"), 4, 0}, Backend::Formula), DomainError);
}

TEST_CASE("recurrences") {
    CHECK(a_rec(8, 2) == 5);
    CHECK(b_rec(8, 2) == 56);
    CHECK(i321once_rec(8, 2) == 40);
    for (int n = 0; n <= 24; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(b_rec(n, k) == i_avoid(n, k, p231));
            CHECK(a_rec(n, k) == i_once(n, k, p231));
            CHECK(i321once_rec(n, k) == i_once(n, k, p321));
        }
    CHECK(b_rec(3, 5) == 0);
}

TEST_CASE("power series arithmetic") {
    const auto one_minus_x = RationalSeries::polynomial(6, {1, -1});
    const auto geometric = RationalSeries::monomial(6, 0) / one_minus_x;
    for (int i = 0; i <= 6; ++i) CHECK(geometric[i] == 1);
    CHECK(geometric[7] == 0);
    CHECK(geometric * one_minus_x == RationalSeries::monomial(6, 0));
    CHECK(one_minus_x.pow(2)[1] == -2);
    CHECK((geometric - geometric) == RationalSeries(6));
    CHECK((geometric * ExactRational(1, 2))[3] == ExactRational(1, 2));
    CHECK_THROWS_AS(geometric / RationalSeries::monomial(6, 1), DomainError);
    CHECK_THROWS_AS(geometric + RationalSeries(5), DomainError);
    CHECK_THROWS_AS(RationalSeries(-1), DomainError);
}

TEST_CASE("generating functions") {
    CHECK(series_B(2, 8)[8] == 56);
    CHECK(series_A(2, 8)[8] == 5);
    CHECK(series_B(0, 0)[0] == 1);
    CHECK(series_A(0, 10) == RationalSeries(10));
    CHECK(series_A(1, 10) == RationalSeries(10));
    CHECK_THROWS_AS(series_B(-1, 4), DomainError);
    CHECK_THROWS_AS(series_A(5, 4), DomainError);
}

TEST_CASE("auxiliary sums") {
    CHECK(f_sum(10, 2) == 75);
    CHECK(f_sum(3, 4) == 0);
    CHECK(f_sum(4, 1) == 0);
    for (int n = 0; n <= 16; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(f_sum(n, k) == g_sum(n, k));
            CHECK(g_sum(n, k) == h_sum(n, k));
            CHECK(f_sum(n, k) == ExactRational(count_paths(n, k + 2)));
        }
}

TEST_CASE("identity report, n <= 16") {
    const auto report = identity_checks(16, 12);
    for (const auto& c : report.checks) {
        INFO(c.name);
        CHECK(c.passed());
        CHECK(c.cells > 0);
    }
    CHECK(report.passed());
    CHECK(identity_checks(0).passed());
}
