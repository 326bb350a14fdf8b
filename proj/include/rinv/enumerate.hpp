#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "rinv/exact.hpp"
#include "rinv/perm.hpp"

namespace rinv {

// Brute-force oracle. Every enumerator visits its objects in lexicographic
// order of the one-line form and is deterministic.

using PermutationVisitor = std::function<void(const Permutation&)>;

/// Visits every involution of S_n, or only those with exactly k fixed
/// points when k is given. Involutions are built directly as partial
/// matchings; nothing is filtered out of S_n.
void for_each_involution(int n, std::optional<int> k, const PermutationVisitor& visit);

std::vector<Permutation> involutions(int n, std::optional<int> k = std::nullopt);

/// Visits all n! permutations of S_n.
void for_each_permutation(int n, const PermutationVisitor& visit);

/// Number of involutions of S_n (the telephone numbers), by recurrence.
ExactCount telephone(int n);

/// i_n^k(a): involutions with k fixed points avoiding a.
ExactCount count_avoiding(int n, int k, const Pattern& a);

/// i_n^k(empty; a): involutions with k fixed points containing a exactly once.
ExactCount count_containing_once(int n, int k, const Pattern& a);

/// s_n^k(T): all permutations of S_n (not only involutions) with k fixed
/// points avoiding every pattern in `patterns`.
ExactCount count_avoiding_set(int n, int k, const std::vector<Pattern>& patterns);

/// For each cycle type of S_n, the number of a-avoiding permutations of that type.
/// Every cycle type of S_n appears, possibly with count 0.
std::map<CycleType, ExactCount> cycle_class_counts(int n, const Pattern& a);

/// All integer partitions of n as descending part lists.
std::vector<std::vector<int>> partitions(int n);

/// Oracle depth defaults; overridable through RINV_ORACLE_DEPTH.
struct OracleDepth {
    int involutions = 10;
    int permutations = 8;

    static OracleDepth from_env();
};

}  // namespace rinv
