#include "rinv/bijections.hpp"

#include <algorithm>

namespace rinv {

namespace {

const Pattern& pattern_123() {
    static const Pattern p({1, 2, 3});
    return p;
}
const Pattern& pattern_213() {
    static const Pattern p({2, 1, 3});
    return p;
}
const Pattern& pattern_321() {
    static const Pattern p({3, 2, 1});
    return p;
}

void require_involution(const Permutation& p, const char* who) {
    if (!is_involution(p)) throw DomainError(std::string(who) + ": not an involution");
}

void require_avoids(const Permutation& p, const Pattern& a, const char* who) {
    if (!avoids(p, a)) throw DomainError(std::string(who) + ": input contains " + a.str());
}

void append(std::vector<Step>& steps, Step s, int count) { steps.insert(steps.end(), static_cast<std::size_t>(count), s); }

Permutation from_pairs(int n, const std::vector<std::pair<int, int>>& transpositions) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
    for (auto [a, b] : transpositions) {
        image[static_cast<std::size_t>(a - 1)] = b;
        image[static_cast<std::size_t>(b - 1)] = a;
    }
    return Permutation(std::move(image));
}

// Position (0-based) of the step that ends at x = n in a path of length 2n.
int midpoint_step(const PartialDyckPath& d, const char* who) {
    if (d.end_height() != 0 || d.length() % 2 != 0 || d.length() == 0) {
        throw DomainError(std::string(who) + ": expected a nonempty standard Dyck path");
    }
    return d.length() / 2 - 1;
}

}  // namespace

PartialDyckPath krattenthaler(const Permutation& p) {
    require_avoids(p, pattern_123(), "krattenthaler");
    std::vector<Step> steps;
    int prev_max = 0;
    int block = 0;  // entries of the current w_i seen so far
    for (int i = p.size(); i >= 1; --i) {
        const int v = p.at(i);
        if (v > prev_max) {
            if (prev_max > 0) append(steps, Step::Down, block + 1);
            append(steps, Step::Up, v - prev_max);
            prev_max = v;
            block = 0;
        } else {
            ++block;
        }
    }
    if (prev_max > 0) append(steps, Step::Down, block + 1);
    return PartialDyckPath(std::move(steps));
}

Permutation krattenthaler_inv(const PartialDyckPath& d) {
    if (d.end_height() != 0) throw DomainError("krattenthaler_inv: path must end at height 0");
    const auto& s = d.steps();
    const int n = d.length() / 2;
    std::vector<int> image(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    int pos = n;  // next position to fill, from the right
    int maximum = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        int ups = 0, downs = 0;
        while (i < s.size() && s[i] == Step::Up) ++ups, ++i;
        while (i < s.size() && s[i] == Step::Down) ++downs, ++i;
        maximum += ups;
        image[static_cast<std::size_t>(pos - 1)] = maximum;
        used[static_cast<std::size_t>(maximum)] = 1;
        pos -= downs;  // the maximum and its block of downs - 1 entries
    }
    // Entries that are not right-to-left maxima decrease left to right.
    int next_value = n;
    for (int q = 1; q <= n; ++q) {
        if (image[static_cast<std::size_t>(q - 1)] != 0) continue;
        while (used[static_cast<std::size_t>(next_value)]) --next_value;
        image[static_cast<std::size_t>(q - 1)] = next_value;
        used[static_cast<std::size_t>(next_value)] = 1;
    }
    Permutation p(std::move(image));
    if (!avoids(p, pattern_123()) || krattenthaler(p) != d) {
        throw std::logic_error("krattenthaler_inv: reconstruction failed for " + d.str());
    }
    return p;
}

PartialDyckPath big_gamma(const PartialDyckPath& d) {
    const int mid = midpoint_step(d, "big_gamma");
    auto steps = d.steps();
    if (steps[static_cast<std::size_t>(mid)] != Step::Down || steps[static_cast<std::size_t>(mid + 1)] != Step::Up) {
        throw DomainError("big_gamma: no valley on the line x = n");
    }
    steps[static_cast<std::size_t>(mid)] = Step::Up;
    steps[static_cast<std::size_t>(mid + 1)] = Step::Down;
    return PartialDyckPath(std::move(steps));
}

PartialDyckPath big_gamma_inv(const PartialDyckPath& d) {
    const int mid = midpoint_step(d, "big_gamma_inv");
    auto steps = d.steps();
    if (steps[static_cast<std::size_t>(mid)] != Step::Up || steps[static_cast<std::size_t>(mid + 1)] != Step::Down) {
        throw DomainError("big_gamma_inv: no peak on the line x = n");
    }
    steps[static_cast<std::size_t>(mid)] = Step::Down;
    steps[static_cast<std::size_t>(mid + 1)] = Step::Up;
    return PartialDyckPath(std::move(steps));
}

Permutation big_gamma_involution(const Permutation& p) {
    require_involution(p, "big_gamma");
    if (fixed_point_count(p) != 0) throw DomainError("big_gamma: involution must have no fixed points");
    return krattenthaler_inv(big_gamma(krattenthaler(p)));
}

Permutation big_gamma_involution_inv(const Permutation& p) {
    require_involution(p, "big_gamma_inv");
    if (fixed_point_count(p) != 2) throw DomainError("big_gamma_inv: involution must have two fixed points");
    return krattenthaler_inv(big_gamma_inv(krattenthaler(p)));
}

Permutation gamma_involution(const Permutation& p) { return involution_of(gamma_move(tableau_of(p))); }

PartialDyckPath delta(const Permutation& p) {
    require_involution(p, "delta");
    require_avoids(p, pattern_321(), "delta");
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) steps.push_back(p.at(i) >= i ? Step::Up : Step::Down);
    return PartialDyckPath(std::move(steps));
}

Permutation delta_inv(const PartialDyckPath& d) {
    const auto& s = d.steps();
    const int n = d.length();
    std::vector<char> coupled(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> pairs;
    for (int j = n - 1; j >= 0; --j) {
        if (s[static_cast<std::size_t>(j)] != Step::Down) continue;
        int i = j - 1;
        while (i >= 0 && (s[static_cast<std::size_t>(i)] != Step::Up || coupled[static_cast<std::size_t>(i)])) --i;
        if (i < 0) throw DomainError("delta_inv: down-step without an up-step to couple");
        coupled[static_cast<std::size_t>(i)] = 1;
        pairs.emplace_back(i + 1, j + 1);
    }
    return from_pairs(n, pairs);
}

ZetaRows zeta_rows(const Permutation& p) {
    require_involution(p, "zeta");
    require_avoids(p, pattern_213(), "zeta");
    struct Row {
        std::vector<int> up, down;
    };
    std::vector<Row> rows(1);
    for (int i = 1; i <= p.size(); ++i) {
        const int v = p.at(i);
        if (v == i) {
            rows.push_back({{i}, {}});
            rows.emplace_back();
        } else if (v > i) {
            const auto& current = rows.back().down;
            const int x = current.empty() ? 0 : *std::max_element(current.begin(), current.end());
            if (v > x) {
                rows.back().up.push_back(i);
                rows.back().down.push_back(v);
            } else {
                Row fresh{{i}, {v}};
                for (auto& above : rows) {
                    auto moved = std::stable_partition(above.down.begin(), above.down.end(), [v](int y) { return y >= v; });
                    fresh.down.insert(fresh.down.end(), moved, above.down.end());
                    above.down.erase(moved, above.down.end());
                }
                rows.push_back(std::move(fresh));
            }
        }
    }
    ZetaRows out;
    for (const auto& r : rows) {
        if (r.up.empty() && r.down.empty()) continue;
        out.up.push_back(static_cast<int>(r.up.size()));
        out.down.push_back(static_cast<int>(r.down.size()));
    }
    return out;
}

PartialDyckPath zeta(const Permutation& p) {
    const ZetaRows rows = zeta_rows(p);
    std::vector<Step> steps;
    for (std::size_t r = 0; r < rows.up.size(); ++r) {
        append(steps, Step::Up, rows.up[r]);
        append(steps, Step::Down, rows.down[r]);
    }
    try {
        return PartialDyckPath(std::move(steps));
    } catch (const DomainError&) {
        throw std::logic_error("zeta: row sizes do not form a partial Dyck path for " + p.str());
    }
}

std::vector<std::pair<int, int>> matched_steps(const PartialDyckPath& d) {
    std::vector<std::pair<int, int>> out;
    std::vector<int> open;
    const auto& s = d.steps();
    for (int i = 0; i < d.length(); ++i) {
        if (s[static_cast<std::size_t>(i)] == Step::Up) {
            open.push_back(i);
        } else {
            out.emplace_back(open.back(), i);
            open.pop_back();
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Permutation zeta_inv(const PartialDyckPath& d) {
    const auto& s = d.steps();
    const int n = d.length();
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    int next = 1;
    for (int i = 0; i < n; ++i) {
        if (s[static_cast<std::size_t>(i)] == Step::Up) label[static_cast<std::size_t>(i)] = next++;
    }
    for (int i = n - 1; i >= 0; --i) {
        if (s[static_cast<std::size_t>(i)] == Step::Down) label[static_cast<std::size_t>(i)] = next++;
    }
    std::vector<std::pair<int, int>> pairs;
    for (auto [up, down] : matched_steps(d)) {
        pairs.emplace_back(label[static_cast<std::size_t>(up)], label[static_cast<std::size_t>(down)]);
    }
    return from_pairs(n, pairs);
}

PartialDyckPath mdp_to_partial(const ModifiedDyckPath& m) {
    std::vector<Step> steps = m.head().steps();
    steps.push_back(Step::Up);
    const auto& tail = m.tail().steps();
    steps.insert(steps.end(), tail.begin(), tail.end() - 1);
    return PartialDyckPath(std::move(steps));
}

ModifiedDyckPath partial_to_mdp(const PartialDyckPath& d) {
    const int target = d.end_height();
    if (target < 2) throw DomainError("partial_to_mdp: path must end at height k + 2 >= 2");
    std::vector<Step> steps = d.steps();
    steps.push_back(Step::Down);

    // Last pair of consecutive up-steps whose second step ends at height k + 2.
    int second = -1;
    int h = 0;
    for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
        h += steps[static_cast<std::size_t>(i)] == Step::Up ? 1 : -1;
        if (i > 0 && h == target && steps[static_cast<std::size_t>(i)] == Step::Up &&
            steps[static_cast<std::size_t>(i - 1)] == Step::Up) {
            second = i;
        }
    }
    if (second < 0) throw std::logic_error("partial_to_mdp: no double up-step reaching height k + 2 in " + d.str());

    std::vector<Step> head(steps.begin(), steps.begin() + (second - 1));
    std::vector<Step> tail(steps.begin() + second, steps.end());
    PartialDyckPath head_path(std::move(head));
    if (head_path.end_height() != target - 2) {
        throw std::logic_error("partial_to_mdp: head does not end at height k for " + d.str());
    }
    return ModifiedDyckPath(std::move(head_path), PartialDyckPath(std::move(tail)));
}

}  // namespace rinv
