#include "rinv/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace rinv {

namespace {

class MatchingWalker {
public:
    MatchingWalker(int n, std::optional<int> k, const PermutationVisitor& visit)
        : n_(n), k_(k), visit_(visit), image_(static_cast<std::size_t>(n), 0) {}

    void run() { step(0, 0, n_); }

private:
    // pos: first candidate unassigned position (0-based); fixed: fixed points
    // placed so far; free: unassigned positions remaining.
    void step(int pos, int fixed, int free) {
        while (pos < n_ && image_[static_cast<std::size_t>(pos)] != 0) ++pos;
        if (pos == n_) {
            if (!k_ || fixed == *k_) visit_(Permutation(image_));
            return;
        }
        if (k_) {
            const int still_needed = *k_ - fixed;
            if (still_needed < 0 || still_needed > free || (free - still_needed) % 2 != 0) return;
        }
        // Fixed point first: value pos+1 is the smallest possible entry here.
        image_[static_cast<std::size_t>(pos)] = pos + 1;
        step(pos + 1, fixed + 1, free - 1);
        image_[static_cast<std::size_t>(pos)] = 0;

        for (int j = pos + 1; j < n_; ++j) {
            if (image_[static_cast<std::size_t>(j)] != 0) continue;
            image_[static_cast<std::size_t>(pos)] = j + 1;
            image_[static_cast<std::size_t>(j)] = pos + 1;
            step(pos + 1, fixed, free - 2);
            image_[static_cast<std::size_t>(pos)] = 0;
            image_[static_cast<std::size_t>(j)] = 0;
        }
    }

    int n_;
    std::optional<int> k_;
    const PermutationVisitor& visit_;
    std::vector<int> image_;
};

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

void for_each_involution(int n, std::optional<int> k, const PermutationVisitor& visit) {
    if (n < 0) return;
    if (k && (*k < 0 || *k > n || (n + *k) % 2 != 0)) return;
    MatchingWalker(n, k, visit).run();
}

std::vector<Permutation> involutions(int n, std::optional<int> k) {
    std::vector<Permutation> out;
    for_each_involution(n, k, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

void for_each_permutation(int n, const PermutationVisitor& visit) {
    if (n < 0) return;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        visit(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

ExactCount telephone(int n) {
    if (n < 0) return 0;
    ExactCount prev = 1, cur = 1;  // t(0), t(1)
    if (n == 0) return prev;
    for (int m = 2; m <= n; ++m) {
        ExactCount next = cur + (m - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

ExactCount count_avoiding(int n, int k, const Pattern& a) {
    std::size_t count = 0;
    for_each_involution(n, k, [&](const Permutation& p) { count += avoids(p, a); });
    return ExactCount(count);
}

ExactCount count_containing_once(int n, int k, const Pattern& a) {
    std::size_t count = 0;
    for_each_involution(n, k, [&](const Permutation& p) { count += contains_once(p, a); });
    return ExactCount(count);
}

ExactCount count_avoiding_set(int n, int k, const std::vector<Pattern>& patterns) {
    if (patterns.empty()) throw DomainError("count_avoiding_set needs at least one pattern");
    std::size_t count = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        if (fixed_point_count(p) != k) return;
        for (const Pattern& a : patterns) {
            if (!avoids(p, a)) return;
        }
        ++count;
    });
    return ExactCount(count);
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (n >= 0) partitions_rec(n, n, cur, out);
    return out;
}

std::map<CycleType, ExactCount> cycle_class_counts(int n, const Pattern& a) {
    std::map<CycleType, ExactCount> out;
    for (auto& parts : partitions(n)) out[CycleType{parts}] = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        if (avoids(p, a)) ++out[cycle_type(p)];
    });
    return out;
}

OracleDepth OracleDepth::from_env() {
    OracleDepth d;
    if (const char* env = std::getenv("RINV_ORACLE_DEPTH")) {
        try {
            d.involutions = std::stoi(env);
        } catch (const std::exception&) {
            // unparsable value: keep the default
        }
    }
    return d;
}

}  // namespace rinv
