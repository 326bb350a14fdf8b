#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rinv/enumerate.hpp"
#include "rinv/syt.hpp"

using namespace rinv;

namespace {

int longest_monotone(const Permutation& p, bool increasing) {
    const int n = p.size();
    std::vector<int> best(static_cast<std::size_t>(n), 1);
    int overall = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            const bool ok = increasing ? p.at(j + 1) < p.at(i + 1) : p.at(j + 1) > p.at(i + 1);
            if (ok) best[static_cast<std::size_t>(i)] = std::max(best[static_cast<std::size_t>(i)], best[static_cast<std::size_t>(j)] + 1);
        }
        overall = std::max(overall, best[static_cast<std::size_t>(i)]);
    }
    return overall;
}

// Hook length formula, as an independent count of SYT of a shape.
ExactCount hook_count(const std::vector<int>& shape) {
    int n = 0;
    for (int r : shape) n += r;
    ExactCount num = 1, den = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        for (int c = 0; c < shape[r]; ++c) {
            int below = 0;
            for (std::size_t s = r + 1; s < shape.size() && shape[s] > c; ++s) ++below;
            den *= shape[r] - c + below;
        }
    }
    return num / den;
}

}  // namespace

TEST_CASE("tableau construction and parsing") {
    const StandardYoungTableau t({{1, 3, 5}, {2, 4}});
    CHECK(t.size() == 5);
    CHECK(t.shape() == std::vector<int>{3, 2});
    CHECK(t.columns() == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}});
    CHECK(t.str() == "1 3 5\n2 4\n");
    CHECK(StandardYoungTableau::parse("1 3 5\n2 4") == t);
    CHECK(StandardYoungTableau::parse("1 3 5;2 4") == t);
    CHECK(StandardYoungTableau::from_columns({{1, 2}, {3, 4}, {5}}) == t);
    CHECK(StandardYoungTableau().size() == 0);

    CHECK_THROWS_AS(StandardYoungTableau({{1, 2}, {3, 4, 5}}), DomainError);  // rows grow
    CHECK_THROWS_AS(StandardYoungTableau({{2, 1}}), DomainError);
    CHECK_THROWS_AS(StandardYoungTableau({{1, 2}, {4, 3}}), DomainError);
    CHECK_THROWS_AS(StandardYoungTableau({{1, 3}, {2, 3}}), DomainError);
    CHECK_THROWS_AS(StandardYoungTableau({{2, 3}, {1, 4}}), DomainError);  // column decreases
    CHECK_THROWS_AS(StandardYoungTableau::parse("1 a"), DomainError);
}

TEST_CASE("tableau of an involution") {
    const auto p = Permutation::parse("34125768");
    CHECK(tableau_of(p).shape() == std::vector<int>{5, 3});
    CHECK(tableau_of(Permutation::identity(4)).rows() == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(tableau_of(Permutation::parse("4321")).shape() == std::vector<int>{1, 1, 1, 1});
    CHECK_THROWS_AS(tableau_of(Permutation::parse("231")), DomainError);
}

TEST_CASE("insertion tableau of a non-involution") {
    CHECK(insertion_tableau(Permutation::parse("231")).rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK(insertion_tableau(Permutation::parse("4132")).rows() == std::vector<std::vector<int>>{{1, 2}, {3}, {4}});
}

TEST_CASE("inverse correspondence") {
    CHECK(involution_of(StandardYoungTableau({{1, 2, 3, 4, 5}})) == Permutation::identity(5));
    CHECK(involution_of(StandardYoungTableau({{1}, {2}})) == Permutation::parse("21"));
    const auto p = Permutation::parse("34125768");
    CHECK(involution_of(tableau_of(p)) == p);
    CHECK(involution_of(StandardYoungTableau()) == Permutation());
}

TEST_CASE("tableau properties 1-3 and round trip, all involutions n <= 9") {
    for (int n = 0; n <= 9; ++n) {
        std::set<StandardYoungTableau> seen;
        for_each_involution(n, std::nullopt, [&](const Permutation& p) {
            const auto t = tableau_of(p);
            const auto shape = t.shape();
            REQUIRE(longest_monotone(p, true) == (shape.empty() ? 0 : shape.front()));
            REQUIRE(longest_monotone(p, false) == static_cast<int>(shape.size()));
            int odd = 0;
            for (const auto& col : t.columns()) odd += col.size() % 2;
            REQUIRE(odd == fixed_point_count(p));
            REQUIRE(involution_of(t) == p);
            seen.insert(t);
        });
        // Every SYT of size n arises exactly once.
        ExactCount total = 0;
        for (const auto& shape : partitions(n)) total += ExactCount(enumerate_syt(shape).size());
        CHECK(ExactCount(seen.size()) == total);
        CHECK(total == telephone(n));
    }
}

TEST_CASE("gamma move") {
    const auto t = StandardYoungTableau::from_columns({{1, 2, 5, 6}, {3, 4}});
    const auto moved = gamma_move(t);
    CHECK(moved.columns() == std::vector<std::vector<int>>{{1, 2, 5}, {3, 4, 6}});
    CHECK(gamma_move(moved) == t);

    const auto col = StandardYoungTableau::from_columns({{1, 2}});
    CHECK(gamma_move(col).columns() == std::vector<std::vector<int>>{{1}, {2}});
    CHECK(involution_of(gamma_move(tableau_of(Permutation::parse("21")))) == Permutation::parse("12"));

    CHECK_THROWS_AS(gamma_move(StandardYoungTableau({{1, 2, 3}})), DomainError);          // three columns
    CHECK_THROWS_AS(gamma_move(StandardYoungTableau::from_columns({{1, 2, 3}, {4, 5}})), DomainError);  // parities differ
    CHECK_THROWS_AS(gamma_move(StandardYoungTableau()), DomainError);
}

TEST_CASE("gamma on I_4^0(123)") {
    const auto p123 = Pattern::parse("123");
    for (const auto& p : involutions(4, 0)) {
        if (!avoids(p, p123)) continue;
        const auto q = involution_of(gamma_move(tableau_of(p)));
        CHECK(fixed_point_count(q) == 2);
        CHECK(avoids(q, p123));
    }
}

TEST_CASE("SYT enumeration") {
    CHECK(enumerate_syt({2, 2}).size() == 2);
    CHECK(enumerate_syt({5}).size() == 1);
    CHECK(enumerate_syt({3, 2}).size() == 5);
    CHECK(enumerate_syt({}).size() == 1);
    CHECK_THROWS_AS(enumerate_syt({2, 3}), DomainError);
    CHECK_THROWS_AS(enumerate_syt({2, 0, 1}), DomainError);

    for (int n = 0; n <= 9; ++n) {
        for (const auto& shape : partitions(n)) {
            const auto all = enumerate_syt(shape);
            CHECK(ExactCount(all.size()) == hook_count(shape));
            CHECK(std::set<StandardYoungTableau>(all.begin(), all.end()).size() == all.size());
            for (const auto& t : all) CHECK(t.shape() == shape);
        }
    }
}
