// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rinv/bijections.hpp"
#include "rinv/enumerate.hpp"
#include "rinv/formulas.hpp"
#include "rinv/reference.hpp"
#include "rinv/verify.hpp"

using namespace rinv;

namespace {

struct Outcome {
    long cells = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& where) {
        ++cells;
        if (!ok) failures.push_back(where);
    }
    void absorb(const CheckResult& c) {
        cells += c.cells;
        for (const auto& f : c.failures) failures.push_back(c.name + ": " + f);
    }
};

std::string cell(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

Outcome tables() {
    Outcome o;
    for (const auto& t : reference_tables()) {
        for (const auto& name : t.patterns) {
            const Pattern a = Pattern::parse(name);
            for (int n = 0; n <= 8; ++n) {
                for (int k = 0; k <= n; ++k) {
                    const ExactCount want = t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
                    const CountingStatistic s{t.mode, a, n, k};
                    const std::string where = to_string(t.mode) + " " + name + " " + cell(n, k);
                    o.expect(evaluate(s, Backend::Formula) == want, "formula " + where);
                    o.expect(evaluate(s, Backend::Oracle) == want, "oracle " + where);
                }
            }
        }
    }
    return o;
}

Outcome cycle_table() {
    Outcome o;
    const auto c132 = cycle_class_counts(6, Pattern::parse("132"));
    const auto c321 = cycle_class_counts(6, Pattern::parse("321"));
    ExactCount s132 = 0, s321 = 0;
    for (const auto& row : s6_cycle_table()) {
        bool found = false;
        for (const auto& [type, count] : c132) {
            if (type.str() != row.type) continue;
            found = true;
            o.expect(count == row.avoiding_132, row.type + " avoiding 132");
            o.expect(c321.at(type) == row.avoiding_321, row.type + " avoiding 321");
            s132 += count;
            s321 += c321.at(type);
        }
        o.expect(found, "cycle type " + row.type + " present");
    }
    o.expect(c132.size() == s6_cycle_table().size(), "no extra cycle types");
    o.expect(s132 == 132 && s321 == 132, "sums are 132");
    return o;
}

Outcome formula_vs_oracle() {
    Outcome o;
    for (const auto& a : s3_patterns()) {
        for (int n = 0; n <= 10; ++n) {
            for (int k = 0; k <= n; ++k) {
                o.expect(i_avoid(n, k, a) == count_avoiding(n, k, a), "avoid " + a.str() + " " + cell(n, k));
                o.expect(i_once(n, k, a) == count_containing_once(n, k, a), "once " + a.str() + " " + cell(n, k));
            }
        }
    }
    return o;
}

Outcome round_trips() {
    Outcome o;
    o.absorb(check_delta(10));
    o.absorb(check_zeta(10));
    o.absorb(check_krattenthaler(7));
    o.absorb(check_gamma(10));
    o.absorb(check_big_gamma(10));
    o.absorb(check_mdp(12));
    return o;
}

Outcome worked_figures() {
    Outcome o;
    o.expect(delta(Permutation::parse("34125768")).str() == "UUDDUUDU", "delta figure");
    const auto z = Permutation::parse("689751423");
    o.expect(zeta(z).str() == "UUUDDUDDU", "zeta figure");
    const auto rows = zeta_rows(z);
    o.expect(rows.up == std::vector<int>{3, 1, 1}, "zeta up rows (3,1,1)");
    o.expect(rows.down == std::vector<int>{2, 2, 0}, "zeta down rows (2,2,0)");
    const ModifiedDyckPath m(PartialDyckPath::parse("UUDU"), PartialDyckPath::parse("UUDDUD"));
    o.expect(mdp_to_partial(m).str() == "UUDUUUUDDU", "MDP figure forward");
    o.expect(partial_to_mdp(PartialDyckPath::parse("UUDUUUUDDU")) == m, "MDP figure backward");
    return o;
}

Outcome catalan_manifestations() {
    Outcome o;
    const Pattern p321 = Pattern::parse("321");
    for (int n = 1; n <= 7; ++n) {
        o.expect(i_avoid(2 * n, 0, p321) == catalan(n), "i_{2n}^0(321), n=" + std::to_string(n));
        o.expect(i_avoid(2 * n - 1, 1, p321) == catalan(n), "i_{2n-1}^1(321), n=" + std::to_string(n));
        if (2 * n <= 10) {
            o.expect(count_avoiding(2 * n, 0, p321) == catalan(n), "oracle, even length, n=" + std::to_string(n));
            o.expect(count_avoiding(2 * n - 1, 1, p321) == catalan(n), "oracle, odd length, n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome identities() {
    Outcome o;
    for (const auto& c : identity_checks(16, 12).checks) o.absorb(c);
    return o;
}

Outcome series() {
    Outcome o;
    const Pattern p231 = Pattern::parse("231");
    const int order = 16;
    const auto one_minus_x2 = RationalSeries::polynomial(order, {1, 0, -1});
    for (int k = 0; k <= 8; ++k) {
        const auto b = series_B(k, order);
        const auto a = series_A(k, order);
        for (int n = 0; n <= order; ++n) {
            const ExactCount bn = n >= k ? i_avoid(n, k, p231) : ExactCount(0);
            const ExactCount an = n >= k ? i_once(n, k, p231) : ExactCount(0);
            o.expect(b[n] == ExactRational(bn), "[x^n]B_k " + cell(n, k));
            o.expect(a[n] == ExactRational(an), "[x^n]A_k " + cell(n, k));
        }
        if (k >= 1) {
            const auto f = RationalSeries::monomial(order, 3, k - 1) * one_minus_x2 * series_B(k - 1, order);
            for (int n = 0; n <= order; ++n) o.expect(a[n] == f[n], "factorization " + cell(n, k));
        }
    }
    return o;
}

Outcome structural() {
    Outcome o;
    o.absorb(check_krattenthaler_involutions(9));
    o.absorb(check_inverse_images(10));
    return o;
}

struct Criterion {
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"reference tables, n <= 8, formula and oracle", 10, tables},
        {"S6 cycle table for 132 and 321", 5, cycle_table},
        {"closed forms equal brute force, all of S3, n <= 10", 60, formula_vs_oracle},
        {"exhaustive bijection round trips", 60, round_trips},
        {"worked figures", 1, worked_figures},
        {"Catalan manifestations, 1 <= n <= 7", 1, catalan_manifestations},
        {"recurrences and identities, n <= 16 (enumerative n <= 12)", 60, identities},
        {"generating functions, n <= 16, k <= 8", 60, series},
        {"structural facts of K, delta_inv and zeta_inv", 60, structural},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool over_budget = secs > c.budget_seconds;
        const bool ok = o.failures.empty() && !over_budget;
        failed += !ok;
        std::printf("%s criterion %zu: %s (%ld cells, %.2f s)\n", ok ? "PASS" : "FAIL", i + 1, c.title, o.cells, secs);
        if (!o.failures.empty()) {
            std::printf("    %zu failures; first: %s\n", o.failures.size(), o.failures.front().c_str());
        }
        if (over_budget) std::printf("    exceeded the %.0f s budget\n", c.budget_seconds);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
