#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rinv/exact.hpp"

namespace rinv {

enum class Step : char { Up = 'U', Down = 'D' };

/// A lattice path of up-steps (1,1) and down-steps (1,-1) from the origin
/// that never falls below the x-axis. Its end height k may be positive;
/// k = 0 is a standard Dyck path. Member of D(n, k).
class PartialDyckPath {
public:
    PartialDyckPath() = default;
    /// Throws DomainError if a prefix goes below the x-axis.
    explicit PartialDyckPath(std::vector<Step> steps);
    /// Parses a word over {U, D}, e.g. "UUDDUUDU". Empty string is the empty path.
    static PartialDyckPath parse(std::string_view word);

    int length() const { return static_cast<int>(steps_.size()); }
    int end_height() const { return height_; }
    int max_height() const;
    const std::vector<Step>& steps() const { return steps_; }
    /// Height after the first `i` steps.
    int height_after(int i) const;

    std::string str() const;

    friend bool operator==(const PartialDyckPath&, const PartialDyckPath&) = default;
    friend auto operator<=>(const PartialDyckPath&, const PartialDyckPath&) = default;

private:
    std::vector<Step> steps_;
    int height_ = 0;
};

/// A partial path to height k followed, after a drop to ground level, by a
/// nonempty standard Dyck path of 2i steps starting at x = n - 2i.
/// Member of MDP(n; k).
class ModifiedDyckPath {
public:
    /// Throws DomainError unless tail is a nonempty path ending at height 0.
    ModifiedDyckPath(PartialDyckPath head, PartialDyckPath tail);
    /// Parses "head|tail".
    static ModifiedDyckPath parse(std::string_view text);

    const PartialDyckPath& head() const { return head_; }
    const PartialDyckPath& tail() const { return tail_; }
    int length() const { return head_.length() + tail_.length(); }
    int drop_height() const { return head_.end_height(); }
    /// Half-length of the tail.
    int tail_half_length() const { return tail_.length() / 2; }

    std::string str() const;

    friend bool operator==(const ModifiedDyckPath&, const ModifiedDyckPath&) = default;
    friend auto operator<=>(const ModifiedDyckPath&, const ModifiedDyckPath&) = default;

private:
    PartialDyckPath head_;
    PartialDyckPath tail_;
};

/// Visits D(n, k) in lexicographic order with U before D. Empty when
/// k < 0, k > n or n + k is odd.
void for_each_path(int n, int k, const std::function<void(const PartialDyckPath&)>& visit);
std::vector<PartialDyckPath> enumerate_paths(int n, int k);

/// |D(n,k)| = (k+1)/(n+1) * binom(n+1, (n-k)/2), zero outside the valid range.
ExactCount count_paths(int n, int k);

/// d(n, j) = |D(2n - j - 1, j - 1)| for j >= 0 (zero at j = 0).
ExactCount d_count(int n, int j);

/// Number of up-steps immediately followed by a down-step.
int peaks(const PartialDyckPath& p);

/// Mirror symmetry about the vertical line through the midpoint.
/// Throws DomainError unless p ends at height 0.
bool is_symmetric(const PartialDyckPath& p);

/// MDP(n; k), ordered by tail half-length, then head, then tail.
void for_each_mdp(int n, int k, const std::function<void(const ModifiedDyckPath&)>& visit);
std::vector<ModifiedDyckPath> enumerate_mdp(int n, int k);

/// |MDP(n; k)| = (k+3)/(n+1) * binom(n+1, (n-k)/2 - 1).
ExactCount count_mdp(int n, int k);

/// ASCII art, one text row per unit of height, '/' and '\' glyphs,
/// highest row first.
std::string render(const PartialDyckPath& p);
/// Same, with the tail drawn at ground level after the head.
std::string render(const ModifiedDyckPath& m);

}  // namespace rinv
