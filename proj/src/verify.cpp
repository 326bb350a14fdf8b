#include "rinv/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rinv/bijections.hpp"
#include "rinv/dyck.hpp"
#include "rinv/enumerate.hpp"
#include "rinv/reference.hpp"

namespace rinv {

const std::vector<Section>& all_sections() {
    static const std::vector<Section> s = {Section::Formulas, Section::Bijections, Section::Identities,
                                           Section::Tables, Section::Cycles};
    return s;
}

std::string to_string(Section s) {
    switch (s) {
        case Section::Formulas: return "formulas";
        case Section::Bijections: return "bijections";
        case Section::Identities: return "identities";
        case Section::Tables: return "tables";
        case Section::Cycles: return "cycles";
    }
    return "?";
}

Section parse_section(const std::string& s) {
    for (Section x : all_sections()) {
        if (to_string(x) == s) return x;
    }
    throw DomainError("unknown section '" + s + "'; expected formulas, bijections, identities, tables or cycles");
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::string VerifyReport::str() const {
    std::ostringstream out;
    long failed = 0;
    for (const auto& c : checks) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cells << " cells";
        if (!c.passed()) out << ", " << c.failures.size() << " failures; first: " << c.failures.front();
        out << ")\n";
        for (const auto& note : c.notes) out << "  " << note << '\n';
        failed += !c.passed();
    }
    out << (failed ? "FAILED: " + std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks\n"
                   : "all " + std::to_string(checks.size()) + " checks passed\n");
    return out.str();
}

namespace {

class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }

    void expect(bool ok, const std::string& where) {
        ++r_.cells;
        if (!ok) r_.failures.push_back(where);
    }
    void equal(const ExactCount& got, const ExactCount& want, const std::string& where) {
        ++r_.cells;
        if (got != want) r_.failures.push_back(where + ": " + got.str() + " != " + want.str());
    }
    // Runs f, turning an exception into a failure at `where`.
    template <class F>
    void guarded(const std::string& where, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            ++r_.cells;
            r_.failures.push_back(where + ": " + e.what());
        }
    }
    void note(std::string s) { r_.notes.push_back(std::move(s)); }
    CheckResult done() { return std::move(r_); }

private:
    CheckResult r_;
};

std::string at(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

std::vector<Permutation> avoiding_involutions(int n, int k, const Pattern& a) {
    std::vector<Permutation> out;
    for_each_involution(n, k, [&](const Permutation& p) {
        if (avoids(p, a)) out.push_back(p);
    });
    return out;
}

template <class Fwd, class Inv>
void path_round_trip(Tally& t, int n_max, const Pattern& a, Fwd fwd, Inv inv) {
    for (int n = 0; n <= n_max; ++n) {
        for (int k = n % 2; k <= n; k += 2) {
            const auto perms = avoiding_involutions(n, k, a);
            std::set<PartialDyckPath> images;
            for (const auto& p : perms) {
                t.guarded(at(n, k) + " p=" + p.str(), [&] {
                    const auto d = fwd(p);
                    images.insert(d);
                    t.expect(d.length() == n && d.end_height() == k, at(n, k) + " image of " + p.str() + " not in D(n,k)");
                    t.expect(inv(d) == p, at(n, k) + " inverse fails at " + p.str());
                });
            }
            t.expect(images.size() == perms.size(), at(n, k) + " forward map not injective");
            long paths = 0;
            for_each_path(n, k, [&](const PartialDyckPath& d) {
                ++paths;
                t.guarded(at(n, k) + " d=" + d.str(), [&] {
                    const auto q = inv(d);
                    t.expect(is_involution(q) && fixed_point_count(q) == k && avoids(q, a),
                             at(n, k) + " inverse image of " + d.str() + " outside the domain");
                    t.expect(fwd(q) == d, at(n, k) + " forward fails at " + d.str());
                });
            });
            t.equal(ExactCount(paths), ExactCount(perms.size()), at(n, k) + " |D(n,k)| vs domain size");
        }
    }
}

std::vector<Permutation> involutions_123(int n, int k) { return avoiding_involutions(n, k, Pattern({1, 2, 3})); }

template <class Fwd, class Inv>
void involution_bijection(Tally& t, int n_max, Fwd fwd, Inv inv) {
    for (int n = 2; n <= n_max; n += 2) {
        const auto from = involutions_123(n, 0);
        const auto to = involutions_123(n, 2);
        const std::set<Permutation> target(to.begin(), to.end());
        std::set<Permutation> images;
        for (const auto& p : from) {
            t.guarded("n=" + std::to_string(n) + " p=" + p.str(), [&] {
                const auto q = fwd(p);
                images.insert(q);
                t.expect(target.count(q) == 1, "n=" + std::to_string(n) + " image of " + p.str() + " outside I_n^2(123)");
                t.expect(inv(q) == p, "n=" + std::to_string(n) + " inverse fails at " + q.str());
            });
        }
        t.expect(images.size() == from.size(), "n=" + std::to_string(n) + " not injective");
        t.equal(ExactCount(from.size()), ExactCount(to.size()), "n=" + std::to_string(n) + " |I^0| vs |I^2|");
        for (const auto& q : to) {
            t.guarded("n=" + std::to_string(n) + " q=" + q.str(),
                      [&] { t.expect(fwd(inv(q)) == q, "n=" + std::to_string(n) + " forward of inverse fails at " + q.str()); });
        }
    }
}

}  // namespace

CheckResult check_formulas_vs_oracle(int n_max) {
    Tally t("closed forms equal brute force for every pattern in S_3");
    for (const auto& a : s3_patterns()) {
        for (int n = 0; n <= n_max; ++n) {
            ExactCount avoid_sum = 0, once_sum = 0;
            for (int k = 0; k <= n; ++k) {
                const auto avoid = count_avoiding(n, k, a);
                const auto once = count_containing_once(n, k, a);
                avoid_sum += avoid;
                once_sum += once;
                const std::string where = a.str() + " " + at(n, k);
                t.guarded(where, [&] {
                    t.equal(i_avoid(n, k, a), avoid, "avoid " + where);
                    t.equal(i_once(n, k, a), once, "once " + where);
                });
            }
            const std::string where = a.str() + " n=" + std::to_string(n);
            t.guarded(where, [&] {
                t.equal(i_avoid_total(n, a), avoid_sum, "avoid total " + where);
                t.equal(i_once_total(n, a), once_sum, "once total " + where);
            });
        }
    }
    return t.done();
}

CheckResult check_reference_tables(int n_max, Backend backend) {
    Tally t(std::string("reference tables reproduced by the ") + (backend == Backend::Formula ? "formulas" : "oracle"));
    for (const auto& table : reference_tables()) {
        for (const auto& name : table.patterns) {
            const Pattern a = Pattern::parse(name);
            for (int n = 0; n <= std::min(n_max, static_cast<int>(table.rows.size()) - 1); ++n) {
                for (int k = 0; k <= n; ++k) {
                    const std::string where = to_string(table.mode) + " " + name + " " + at(n, k);
                    t.guarded(where, [&] {
                        t.equal(evaluate(CountingStatistic{table.mode, a, n, k}, backend),
                                table.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)], where);
                    });
                }
            }
        }
    }
    return t.done();
}

CheckResult check_cycle_table() {
    Tally t("S6 cycle table");
    const auto c132 = cycle_class_counts(6, Pattern({1, 3, 2}));
    const auto c321 = cycle_class_counts(6, Pattern({3, 2, 1}));
    std::map<std::string, std::pair<ExactCount, ExactCount>> by_name;
    for (const auto& [type, count] : c132) by_name[type.str()].first = count;
    for (const auto& [type, count] : c321) by_name[type.str()].second = count;
    t.equal(ExactCount(by_name.size()), ExactCount(s6_cycle_table().size()), "number of cycle types");
    ExactCount sum132 = 0, sum321 = 0;
    for (const auto& row : s6_cycle_table()) {
        const auto it = by_name.find(row.type);
        if (it == by_name.end()) {
            t.expect(false, "missing cycle type " + row.type);
            continue;
        }
        const auto& [got132, got321] = it->second;
        t.equal(got132, row.avoiding_132, row.type + " avoiding 132");
        t.equal(got321, row.avoiding_321, row.type + " avoiding 321");
        sum132 += got132;
        sum321 += got321;
        if (row.avoiding_132 != row.avoiding_321) {
            t.note("S6 cycle table: " + row.type + " gives " + got132.str() + " vs " + got321.str());
        }
    }
    t.equal(sum132, 132, "sum avoiding 132");
    t.equal(sum321, 132, "sum avoiding 321");
    t.note("S6 cycle table: sums " + sum132.str() + " and " + sum321.str());
    return t.done();
}

CheckResult check_delta(int n_max) {
    Tally t("delta round trips over I_n^k(321) and D(n,k)");
    path_round_trip(t, n_max, Pattern({3, 2, 1}), [](const Permutation& p) { return delta(p); },
                    [](const PartialDyckPath& d) { return delta_inv(d); });
    return t.done();
}

CheckResult check_zeta(int n_max) {
    Tally t("zeta round trips over I_n^k(213) and D(n,k)");
    path_round_trip(t, n_max, Pattern({2, 1, 3}), [](const Permutation& p) { return zeta(p); },
                    [](const PartialDyckPath& d) { return zeta_inv(d); });
    return t.done();
}

CheckResult check_krattenthaler(int n_max) {
    Tally t("Krattenthaler round trips over S_n(123) and D(2n,0)");
    const Pattern p123({1, 2, 3});
    for (int n = 0; n <= n_max; ++n) {
        long domain = 0;
        std::set<PartialDyckPath> images;
        for_each_permutation(n, [&](const Permutation& p) {
            if (!avoids(p, p123)) return;
            ++domain;
            t.guarded("p=" + p.str(), [&] {
                const auto d = krattenthaler(p);
                images.insert(d);
                t.expect(d.length() == 2 * n && d.end_height() == 0, "image of " + p.str() + " not in D(2n,0)");
                t.expect(krattenthaler_inv(d) == p, "inverse fails at " + p.str());
            });
        });
        t.expect(images.size() == static_cast<std::size_t>(domain), "n=" + std::to_string(n) + " not injective");
        long paths = 0;
        for_each_path(2 * n, 0, [&](const PartialDyckPath& d) {
            ++paths;
            t.guarded("d=" + d.str(), [&] {
                const auto q = krattenthaler_inv(d);
                t.expect(avoids(q, p123) && krattenthaler(q) == d, "forward of inverse fails at " + d.str());
            });
        });
        t.equal(ExactCount(domain), ExactCount(paths), "n=" + std::to_string(n) + " |S_n(123)| vs |D(2n,0)|");
    }
    return t.done();
}

CheckResult check_gamma(int n_max) {
    Tally t("gamma is a bijection I_n^0(123) -> I_n^2(123)");
    involution_bijection(t, n_max, [](const Permutation& p) { return gamma_involution(p); },
                         [](const Permutation& p) { return gamma_involution(p); });
    return t.done();
}

CheckResult check_big_gamma(int n_max) {
    Tally t("Gamma is a bijection I_n^0(123) -> I_n^2(123)");
    involution_bijection(t, n_max, [](const Permutation& p) { return big_gamma_involution(p); },
                         [](const Permutation& p) { return big_gamma_involution_inv(p); });
    return t.done();
}

CheckResult check_mdp(int n_max) {
    Tally t("MDP(n;k) <-> D(n,k+2) round trips");
    for (int n = 0; n <= n_max; ++n) {
        for (int k = n % 2; k <= n; k += 2) {
            long mdps = 0;
            std::set<PartialDyckPath> images;
            for_each_mdp(n, k, [&](const ModifiedDyckPath& m) {
                ++mdps;
                t.guarded(at(n, k) + " m=" + m.str(), [&] {
                    const auto d = mdp_to_partial(m);
                    images.insert(d);
                    t.expect(d.length() == n && d.end_height() == k + 2, at(n, k) + " image of " + m.str() + " not in D(n,k+2)");
                    t.expect(partial_to_mdp(d) == m, at(n, k) + " inverse fails at " + m.str());
                });
            });
            t.expect(images.size() == static_cast<std::size_t>(mdps), at(n, k) + " not injective");
            long paths = 0;
            for_each_path(n, k + 2, [&](const PartialDyckPath& d) {
                ++paths;
                t.guarded(at(n, k) + " d=" + d.str(), [&] {
                    const auto m = partial_to_mdp(d);
                    t.expect(m.length() == n && m.drop_height() == k && mdp_to_partial(m) == d,
                             at(n, k) + " forward of inverse fails at " + d.str());
                });
            });
            t.equal(ExactCount(mdps), ExactCount(paths), at(n, k) + " |MDP(n;k)| vs |D(n,k+2)|");
        }
    }
    return t.done();
}

CheckResult check_krattenthaler_involutions(int n_max) {
    Tally t("K-images of I_n(123) are symmetric with peak parity set by fixed points");
    const Pattern p123({1, 2, 3});
    for (int n = 0; n <= n_max; ++n) {
        for_each_involution(n, std::nullopt, [&](const Permutation& p) {
            if (!avoids(p, p123)) return;
            t.guarded("p=" + p.str(), [&] {
                const auto d = krattenthaler(p);
                t.expect(is_symmetric(d), "K(" + p.str() + ") = " + d.str() + " not symmetric");
                const int fp = fixed_point_count(p);
                if (fp == 0) t.expect(peaks(d) % 2 == 0, "K(" + p.str() + ") has an odd number of peaks");
                if (fp == 2) t.expect(peaks(d) % 2 == 1, "K(" + p.str() + ") has an even number of peaks");
            });
        });
    }
    return t.done();
}

CheckResult check_inverse_images(int n_max) {
    Tally t("delta_inv images avoid 321, zeta_inv images avoid 213");
    const Pattern p321({3, 2, 1}), p213({2, 1, 3});
    for (int n = 0; n <= n_max; ++n) {
        for (int k = n % 2; k <= n; k += 2) {
            for_each_path(n, k, [&](const PartialDyckPath& d) {
                t.guarded("d=" + d.str(), [&] {
                    t.expect(avoids(delta_inv(d), p321), "delta_inv(" + d.str() + ") contains 321");
                    t.expect(avoids(zeta_inv(d), p213), "zeta_inv(" + d.str() + ") contains 213");
                });
            });
        }
    }
    return t.done();
}

VerifyReport run_verify(int n_max, const std::vector<Section>& sections, int oracle_depth) {
    if (n_max < 0) throw DomainError("n-max must be nonnegative");
    VerifyReport report;
    const int brute = std::min(n_max, oracle_depth);
    auto want = [&](Section s) { return std::find(sections.begin(), sections.end(), s) != sections.end(); };

    if (want(Section::Formulas)) {
        report.checks.push_back(check_formulas_vs_oracle(brute));
        Tally t("s_n^k({231,312}) = i_n^k(231)");
        const Pattern p231({2, 3, 1}), p312({3, 1, 2});
        for (int n = 0; n <= std::min(brute, OracleDepth::from_env().permutations); ++n) {
            for (int k = 0; k <= n; ++k) t.equal(count_avoiding_set(n, k, {p231, p312}), i_avoid(n, k, p231), at(n, k));
        }
        report.checks.push_back(t.done());
    }
    if (want(Section::Bijections)) {
        report.checks.push_back(check_delta(std::min(brute, 10)));
        report.checks.push_back(check_zeta(std::min(brute, 10)));
        report.checks.push_back(check_krattenthaler(std::min(brute, 7)));
        report.checks.push_back(check_gamma(std::min(brute, 10)));
        report.checks.push_back(check_big_gamma(std::min(brute, 10)));
        report.checks.push_back(check_mdp(std::min(n_max, 12)));
        report.checks.push_back(check_krattenthaler_involutions(std::min(brute, 9)));
        report.checks.push_back(check_inverse_images(std::min(brute, 10)));
    }
    if (want(Section::Identities)) {
        for (auto& c : identity_checks(n_max, std::min(brute, 12)).checks) report.checks.push_back(std::move(c));
    }
    if (want(Section::Tables)) {
        report.checks.push_back(check_reference_tables(n_max, Backend::Formula));
        report.checks.push_back(check_reference_tables(brute, Backend::Oracle));
    }
    if (want(Section::Cycles) && n_max >= 6 && OracleDepth::from_env().permutations >= 6) {
        report.checks.push_back(check_cycle_table());
    }
    return report;
}

}  // namespace rinv
