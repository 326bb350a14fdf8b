#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rinv/exact.hpp"
#include "rinv/perm.hpp"

namespace rinv {

enum class Mode { Avoid, ContainOnce };

std::string to_string(Mode m);
/// Accepts "avoid" and "once".
Mode parse_mode(const std::string& s);

/// i_n^k(a) (mode Avoid) or i_n^k(empty; a) (mode ContainOnce); when k is
/// absent the statistic is the total over all k.
struct CountingStatistic {
    Mode mode = Mode::Avoid;
    Pattern pattern{std::vector<int>{1, 2, 3}};
    int n = 0;
    std::optional<int> k;
};

enum class Backend { Formula, Oracle };

/// Evaluates a statistic with the chosen backend. The formula backend only
/// accepts patterns of length three.
ExactCount evaluate(const CountingStatistic& stat, Backend backend = Backend::Formula);

// Closed forms. Every formula is evaluated in exact rationals and the
// result is asserted integral. Cells with n + k odd are zero.

/// Number of involutions of S_n with k fixed points avoiding a (a in S_3).
ExactCount i_avoid(int n, int k, const Pattern& a);
/// Number of involutions of S_n with k fixed points containing a exactly once.
ExactCount i_once(int n, int k, const Pattern& a);

/// Totals over k: binom(n, floor(n/2)) for 123/132/213/321, 2^{n-1} for 231/312.
ExactCount i_avoid_total(int n, const Pattern& a);
/// Totals over k. Uses the closed form for the total where one applies
/// (123: n >= 3; 132/213: n >= 3; 231/312: n >= 5), otherwise the sum of
/// the refined formulas.
ExactCount i_once_total(int n, const Pattern& a);

// Recurrences. Small-n base cells are taken from the brute-force oracle, so
// agreement with the closed forms is an independent check.

/// b(n,k) = i_n^k(231) via b(n,k) = 2 b(n-2,k) + b(n-1,k-1); seeds n <= 2.
ExactCount b_rec(int n, int k);
/// a(n,k) = i_n^k(empty;231) via
/// a(n,k) = 2a(n-2,k) + a(n-1,k-1) + b(n-6,k-2) + b(n-5,k-3); seeds n <= 6.
ExactCount a_rec(int n, int k);
/// i(n,k) = i_n^k(empty;321) via the smallest-fixed-point decomposition
///   i(n,k) = sum_{f odd} i(n-f,k-1) C_{(f-1)/2} + sum_{f even} i_{n-f}^k(321) C_{f/2},
/// with i(n,0) = 0.
ExactCount i321once_rec(int n, int k);

/// Exact rational power series truncated after x^order.
class RationalSeries {
public:
    explicit RationalSeries(int order);
    RationalSeries(int order, const std::vector<ExactRational>& coefficients);

    static RationalSeries monomial(int order, int exponent, ExactRational coefficient = 1);
    /// Polynomial with integer coefficients c_0 + c_1 x + ...
    static RationalSeries polynomial(int order, const std::vector<long long>& coefficients);

    int order() const { return order_; }
    /// Coefficient of x^i; zero beyond the order.
    const ExactRational& operator[](int i) const;
    ExactRational& operator[](int i);

    RationalSeries& operator+=(const RationalSeries& o);
    RationalSeries& operator-=(const RationalSeries& o);
    RationalSeries& operator*=(const ExactRational& c);
    friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
    friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
    friend RationalSeries operator*(RationalSeries a, const ExactRational& c) { return a *= c; }
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    /// Division by a series with nonzero constant term.
    friend RationalSeries operator/(const RationalSeries& a, const RationalSeries& b);
    RationalSeries pow(int e) const;

    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

private:
    int order_;
    std::vector<ExactRational> c_;
};

/// B_k(x) = x^k (1 - x^2) / (1 - 2x^2)^{k+1}, generating function of i_n^k(231).
RationalSeries series_B(int k, int order);
/// A_k(x) = (k-1) x^{k+2} (1 - x^2)^2 / (1 - 2x^2)^k for k >= 1, generating
/// function of i_n^k(empty;231). A_0 is the zero series.
RationalSeries series_A(int k, int order);

// Auxiliary sums used by the identity checks.
ExactRational f_sum(int n, int k);  // (k+3)/(n+1) binom(n+1, (n-k)/2 - 1)
ExactRational g_sum(int n, int k);  // sum_{i=1}^{(n-k)/2} (k+1)/(n-2i+1) binom(n-2i+1, (n-k-2i)/2) C_i
ExactRational h_sum(int n, int k);  // sum_{i=1}^{(n-k)/2} (k+2)/(n-2i+2) binom(n-2i+2, (n-k)/2-i) C_{i-1}

struct CheckResult {
    std::string name;
    long cells = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // informational lines for reports

    bool passed() const { return failures.empty(); }
};

struct IdentityReport {
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Numerically verifies the recurrences, identities and generating
/// functions for all n <= n_max (enumerative checks stop at
/// min(n_max, enumerative_max)).
IdentityReport identity_checks(int n_max, int enumerative_max = 12);

}  // namespace rinv
