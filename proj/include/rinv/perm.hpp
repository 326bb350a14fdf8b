#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rinv/exact.hpp"

namespace rinv {

/// A permutation of {1..n} in one-line notation. Position i (1-based)
/// maps to `at(i)`. n = 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;
    /// Throws DomainError unless `values` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);
    /// Parses the space-separated text form, e.g. "3 4 1 2 5 7 6 8".
    /// A string of digits with no spaces ("231") is also accepted.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    /// Image of position i, 1 <= i <= n.
    int at(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> values() const { return values_; }

    Permutation inverse() const;

    /// Space-separated text form.
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// An order-isomorphism template: a permutation of length m >= 2.
class Pattern {
public:
    /// Throws DomainError unless `values` is a rearrangement of 1..m, m >= 2.
    explicit Pattern(std::vector<int> values);
    /// Digit-string form, e.g. "132".
    static Pattern parse(std::string_view digits);

    int size() const { return static_cast<int>(values_.size()); }
    std::span<const int> values() const { return values_; }
    std::string str() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    std::vector<int> values_;
};

/// The six patterns of length three, in lexicographic order.
const std::vector<Pattern>& s3_patterns();

/// Multiset of cycle lengths, sorted descending.
struct CycleType {
    std::vector<int> lengths;

    int total() const;
    int largest() const { return lengths.empty() ? 0 : lengths.front(); }
    /// Exponent notation with ascending lengths, e.g. "1^22^2" or "2^14^1".
    std::string str() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// Positions i with p(i) = i, ascending.
std::vector<int> fixed_points(const Permutation& p);
int fixed_point_count(const Permutation& p);

bool is_involution(const Permutation& p);

/// Number of index subsequences of p order-isomorphic to a.
ExactCount occurrences(const Permutation& p, const Pattern& a);

/// Same count, but stops once `limit` occurrences have been seen.
/// Returns min(count, limit).
std::size_t occurrences_up_to(const Permutation& p, const Pattern& a, std::size_t limit);

inline bool avoids(const Permutation& p, const Pattern& a) {
    return occurrences_up_to(p, a, 1) == 0;
}
inline bool contains_once(const Permutation& p, const Pattern& a) {
    return occurrences_up_to(p, a, 2) == 1;
}

/// Conjugation by the reversal: p*(i) = n + 1 - p(n + 1 - i).
Permutation reverse_conjugate(const Permutation& p);

CycleType cycle_type(const Permutation& p);

/// Cycle notation with every cycle starting at its smallest element,
/// cycles ordered by that element: "(1 3)(2 4)(5)(6 7)(8)".
std::string cycle_notation(const Permutation& p);

}  // namespace rinv
