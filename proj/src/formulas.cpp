#include "rinv/formulas.hpp"

#include <functional>
#include <sstream>

#include "rinv/dyck.hpp"
#include "rinv/enumerate.hpp"
#include "rinv/syt.hpp"

namespace rinv {

namespace {

enum class S3 { P123, P132, P213, P231, P312, P321 };

S3 classify(const Pattern& a) {
    const std::string s = a.str();
    if (s == "123") return S3::P123;
    if (s == "132") return S3::P132;
    if (s == "213") return S3::P213;
    if (s == "231") return S3::P231;
    if (s == "312") return S3::P312;
    if (s == "321") return S3::P321;
    throw DomainError("closed forms exist only for patterns of length 3, got " + s);
}

void require_cell(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("need 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

ExactRational q(const ExactCount& c) { return ExactRational(c); }

std::string cell(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

}  // namespace

std::string to_string(Mode m) { return m == Mode::Avoid ? "avoid" : "once"; }

Mode parse_mode(const std::string& s) {
    if (s == "avoid") return Mode::Avoid;
    if (s == "once" || s == "contain_once" || s == "contain-once") return Mode::ContainOnce;
    throw DomainError("unknown statistic '" + s + "'; expected avoid or once");
}

ExactCount i_avoid(int n, int k, const Pattern& a) {
    const S3 p = classify(a);
    require_cell(n, k);
    if ((n + k) % 2 != 0) return 0;
    const int half = (n - k) / 2;
    switch (p) {
        case S3::P123:
            if (k >= 3) return 0;
            if (k == 1) return binomial(n, (n - 1) / 2);
            return binomial(n - 1, n / 2);
        case S3::P132:
        case S3::P213:
        case S3::P321:
            return require_integral(ExactRational(k + 1, n + 1) * q(binomial(n + 1, half)), "i_avoid");
        case S3::P231:
        case S3::P312: {
            ExactRational v = pow2((n - k - 2) / 2) * q(binomial((n + k) / 2, half) + binomial((n + k - 2) / 2, half));
            return require_integral(v, "i_avoid");
        }
    }
    return 0;
}

ExactCount i_once(int n, int k, const Pattern& a) {
    const S3 p = classify(a);
    require_cell(n, k);
    if ((n + k) % 2 != 0) return 0;
    const int half = (n - k) / 2;
    switch (p) {
        case S3::P123:
            if (k != 3 || n < 3) return 0;
            return require_integral(ExactRational(3, n) * q(binomial(n, (n - 3) / 2)), "i_once(123)");
        case S3::P132:
        case S3::P213:
            if (n < 3 || k == 0) return 0;
            return require_integral(ExactRational(k + 1, n - 1) * q(binomial(n - 1, (n + k) / 2)), "i_once(132)");
        case S3::P231:
        case S3::P312: {
            if (n < 4) return 0;
            const int top = (n + k) / 2;
            ExactCount bracket = binomial(top - 2, half - 1) + 2 * binomial(top - 3, half - 1) + binomial(top - 4, half - 1);
            // (n-k-6) is even here, so the halving is exact.
            ExactRational v = ExactRational(k - 1) * pow2((n - k - 6) / 2) * q(bracket);
            return require_integral(v, "i_once(231)");
        }
        case S3::P321:
            if (n < 3) return 0;
            return require_integral(ExactRational(k * (k + 3), n + 1) * q(binomial(n + 1, half - 1)), "i_once(321)");
    }
    return 0;
}

ExactCount i_avoid_total(int n, const Pattern& a) {
    const S3 p = classify(a);
    if (n < 0) throw DomainError("n must be nonnegative");
    if (n == 0) return 1;
    if (p == S3::P231 || p == S3::P312) return ExactCount(1) << (n - 1);
    return binomial(n, n / 2);
}

ExactCount i_once_total(int n, const Pattern& a) {
    const S3 p = classify(a);
    if (n < 0) throw DomainError("n must be nonnegative");
    switch (p) {
        case S3::P123:
            if (n >= 3 && n % 2 == 1) {
                return require_integral(ExactRational(3, n) * q(binomial(n, (n - 3) / 2)), "i_once_total(123)");
            }
            break;
        case S3::P132:
        case S3::P213:
            if (n >= 3) return binomial(n - 2, (n - 3) / 2);
            break;
        case S3::P231:
        case S3::P312:
            if (n >= 5) return require_integral(ExactRational(n - 1) * pow2(n - 6), "i_once_total(231)");
            break;
        case S3::P321:
            break;
    }
    ExactCount sum = 0;
    for (int k = 0; k <= n; ++k) sum += i_once(n, k, a);
    return sum;
}

ExactCount evaluate(const CountingStatistic& stat, Backend backend) {
    if (backend == Backend::Formula) {
        if (stat.k) return stat.mode == Mode::Avoid ? i_avoid(stat.n, *stat.k, stat.pattern) : i_once(stat.n, *stat.k, stat.pattern);
        return stat.mode == Mode::Avoid ? i_avoid_total(stat.n, stat.pattern) : i_once_total(stat.n, stat.pattern);
    }
    auto count = [&](int k) {
        return stat.mode == Mode::Avoid ? count_avoiding(stat.n, k, stat.pattern) : count_containing_once(stat.n, k, stat.pattern);
    };
    if (stat.k) {
        require_cell(stat.n, *stat.k);
        return count(*stat.k);
    }
    ExactCount sum = 0;
    for (int k = 0; k <= stat.n; ++k) sum += count(k);
    return sum;
}

// ---------------------------------------------------------------------------
// Recurrences

namespace {

using Table = std::vector<std::vector<ExactCount>>;

ExactCount at(const Table& t, int n, int k) {
    if (n < 0 || k < 0 || n >= static_cast<int>(t.size()) || k > n) return 0;
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Table triangle(int n) {
    Table t;
    for (int m = 0; m <= n; ++m) t.emplace_back(static_cast<std::size_t>(m) + 1, ExactCount(0));
    return t;
}

constexpr int kBSeedDepth = 2;
constexpr int kASeedDepth = 6;
constexpr int kISeedDepth = 8;

const Pattern& p231() {
    static const Pattern p({2, 3, 1});
    return p;
}
const Pattern& p321() {
    static const Pattern p({3, 2, 1});
    return p;
}

Table b_table(int n) {
    Table t = triangle(n);
    for (int m = 0; m <= n; ++m) {
        for (int k = 0; k <= m; ++k) {
            t[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                m <= kBSeedDepth ? count_avoiding(m, k, p231()) : 2 * at(t, m - 2, k) + at(t, m - 1, k - 1);
        }
    }
    return t;
}

Table a_table(int n) {
    const Table b = b_table(std::max(n, 0));
    Table t = triangle(n);
    for (int m = 0; m <= n; ++m) {
        for (int k = 0; k <= m; ++k) {
            t[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                m <= kASeedDepth ? count_containing_once(m, k, p231())
                                 : 2 * at(t, m - 2, k) + at(t, m - 1, k - 1) + at(b, m - 6, k - 2) + at(b, m - 5, k - 3);
        }
    }
    return t;
}

Table i321_table(int n) {
    Table t = triangle(n);
    for (int m = 0; m <= n; ++m) {
        t[static_cast<std::size_t>(m)][0] = m <= kISeedDepth ? count_containing_once(m, 0, p321()) : ExactCount(0);
        for (int k = 1; k <= m; ++k) {
            ExactCount v = 0;
            for (int f = 1; f <= m - k; f += 2) v += at(t, m - f, k - 1) * catalan((f - 1) / 2);
            for (int f = 2; f <= m - k; f += 2) v += i_avoid(m - f, k, p321()) * catalan(f / 2);
            t[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = v;
        }
    }
    return t;
}

}  // namespace

ExactCount b_rec(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return at(b_table(n), n, k);
}

ExactCount a_rec(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return at(a_table(n), n, k);
}

ExactCount i321once_rec(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return at(i321_table(n), n, k);
}

// ---------------------------------------------------------------------------
// Power series

RationalSeries::RationalSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw DomainError("series order must be nonnegative");
}

RationalSeries::RationalSeries(int order, const std::vector<ExactRational>& coefficients) : RationalSeries(order) {
    for (std::size_t i = 0; i < coefficients.size() && i < c_.size(); ++i) c_[i] = coefficients[i];
}

RationalSeries RationalSeries::monomial(int order, int exponent, ExactRational coefficient) {
    RationalSeries s(order);
    if (exponent >= 0 && exponent <= order) s.c_[static_cast<std::size_t>(exponent)] = std::move(coefficient);
    return s;
}

RationalSeries RationalSeries::polynomial(int order, const std::vector<long long>& coefficients) {
    RationalSeries s(order);
    for (std::size_t i = 0; i < coefficients.size() && i < s.c_.size(); ++i) s.c_[i] = coefficients[i];
    return s;
}

const ExactRational& RationalSeries::operator[](int i) const {
    static const ExactRational zero = 0;
    if (i < 0 || i > order_) return zero;
    return c_[static_cast<std::size_t>(i)];
}

ExactRational& RationalSeries::operator[](int i) {
    if (i < 0 || i > order_) throw std::out_of_range("series index beyond order");
    return c_[static_cast<std::size_t>(i)];
}

namespace {
void same_order(const RationalSeries& a, const RationalSeries& b) {
    if (a.order() != b.order()) throw DomainError("series orders differ");
}
}  // namespace

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
    same_order(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& o) {
    same_order(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

RationalSeries& RationalSeries::operator*=(const ExactRational& c) {
    for (auto& x : c_) x *= c;
    return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    same_order(a, b);
    RationalSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= a.order_; ++j) {
            r.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

RationalSeries operator/(const RationalSeries& a, const RationalSeries& b) {
    same_order(a, b);
    if (b.c_[0] == 0) throw DomainError("series division needs a nonzero constant term");
    RationalSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        ExactRational v = a.c_[static_cast<std::size_t>(i)];
        for (int j = 1; j <= i; ++j) v -= b.c_[static_cast<std::size_t>(j)] * r.c_[static_cast<std::size_t>(i - j)];
        r.c_[static_cast<std::size_t>(i)] = v / b.c_[0];
    }
    return r;
}

RationalSeries RationalSeries::pow(int e) const {
    if (e < 0) throw DomainError("negative series power");
    RationalSeries r = monomial(order_, 0);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

RationalSeries series_B(int k, int order) {
    if (k < 0) throw DomainError("series_B needs k >= 0");
    if (order < k) throw DomainError("series order must be at least k");
    const auto one_minus_x2 = RationalSeries::polynomial(order, {1, 0, -1});
    const auto one_minus_2x2 = RationalSeries::polynomial(order, {1, 0, -2});
    return RationalSeries::monomial(order, k) * one_minus_x2 / one_minus_2x2.pow(k + 1);
}

RationalSeries series_A(int k, int order) {
    if (k < 0) throw DomainError("series_A needs k >= 0");
    if (order < k) throw DomainError("series order must be at least k");
    if (k == 0) return RationalSeries(order);
    const auto one_minus_x2 = RationalSeries::polynomial(order, {1, 0, -1});
    const auto one_minus_2x2 = RationalSeries::polynomial(order, {1, 0, -2});
    return RationalSeries::monomial(order, k + 2, k - 1) * one_minus_x2.pow(2) / one_minus_2x2.pow(k);
}

// ---------------------------------------------------------------------------
// Identity checks

ExactRational f_sum(int n, int k) {
    if (n < k || k < 0 || (n + k) % 2 != 0) return 0;
    return ExactRational(k + 3, n + 1) * q(binomial(n + 1, (n - k) / 2 - 1));
}

ExactRational g_sum(int n, int k) {
    if (n < k || k < 0 || (n + k) % 2 != 0) return 0;
    ExactRational s = 0;
    for (int i = 1; i <= (n - k) / 2; ++i) {
        s += ExactRational(k + 1, n - 2 * i + 1) * q(binomial(n - 2 * i + 1, (n - k - 2 * i) / 2)) * q(catalan(i));
    }
    return s;
}

ExactRational h_sum(int n, int k) {
    if (n < k || k < 0 || (n + k) % 2 != 0) return 0;
    ExactRational s = 0;
    for (int i = 1; i <= (n - k) / 2; ++i) {
        s += ExactRational(k + 2, n - 2 * i + 2) * q(binomial(n - 2 * i + 2, (n - k) / 2 - i)) * q(catalan(i - 1));
    }
    return s;
}

bool IdentityReport::passed() const {
    for (const auto& c : checks) {
        if (!c.passed()) return false;
    }
    return true;
}

namespace {

class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void equal(const std::string& where, const ExactCount& lhs, const ExactCount& rhs) {
        ++result_.cells;
        if (lhs != rhs) result_.failures.push_back(where + ": " + lhs.str() + " != " + rhs.str());
    }
    void equal(const std::string& where, const ExactRational& lhs, const ExactRational& rhs) {
        ++result_.cells;
        if (lhs != rhs) result_.failures.push_back(where + ": " + lhs.str() + " != " + rhs.str());
    }

    CheckResult done() { return std::move(result_); }

private:
    CheckResult result_;
};

}  // namespace

IdentityReport identity_checks(int n_max, int enumerative_max) {
    IdentityReport report;
    const int enum_max = std::min(n_max, enumerative_max);
    const Pattern p123({1, 2, 3}), p132({1, 3, 2}), p213({2, 1, 3}), p231({2, 3, 1}), p312({3, 1, 2}),
        p321({3, 2, 1});

    {
        Checker c("d(n,j) = d(n,j+1) + d(n-1,j-1)");
        for (int n = 2; n <= n_max; ++n) {
            for (int j = 1; j <= n; ++j) c.equal("n=" + std::to_string(n) + " j=" + std::to_string(j), d_count(n, j), d_count(n, j + 1) + d_count(n - 1, j - 1));
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("d(n,j) = d(n+1,j+1) - d(n+1,j+2)");
        for (int n = 1; n <= n_max; ++n) {
            for (int j = 1; j <= n; ++j) c.equal("n=" + std::to_string(n) + " j=" + std::to_string(j), d_count(n, j), d_count(n + 1, j + 1) - d_count(n + 1, j + 2));
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("d(n,1) = d(n,2) = C_{n-1}");
        for (int n = 2; n <= n_max; ++n) {
            c.equal("d(" + std::to_string(n) + ",1)", d_count(n, 1), catalan(n - 1));
            c.equal("d(" + std::to_string(n) + ",2)", d_count(n, 2), catalan(n - 1));
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("sum_{j=2}^n d(n,j) = d(n+1,3) = C_n - C_{n-1}");
        for (int n = 1; n <= n_max; ++n) {
            ExactCount s = 0;
            for (int j = 2; j <= n; ++j) s += d_count(n, j);
            c.equal("n=" + std::to_string(n), s, d_count(n + 1, 3));
            c.equal("n=" + std::to_string(n) + " catalan", s, catalan(n) - catalan(n - 1));
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("i_n^3(empty;123) = sum d((n+1)/2, j) = C_{(n+1)/2} - C_{(n-1)/2}");
        for (int n = 3; n <= n_max; n += 2) {
            const int b = (n + 1) / 2;
            ExactCount s = 0;
            for (int j = 2; j <= b; ++j) s += d_count(b, j);
            c.equal("n=" + std::to_string(n), i_once(n, 3, p123), s);
            c.equal("n=" + std::to_string(n) + " catalan", s, catalan(b) - catalan(b - 1));
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("f(n,k) = g(n,k) = h(n,k)");
        for (int n = 0; n <= n_max; ++n) {
            for (int k = n % 2; k <= n; k += 2) {
                c.equal("g" + cell(n, k), f_sum(n, k), g_sum(n, k));
                c.equal("h" + cell(n, k), f_sum(n, k), h_sum(n, k));
            }
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("f, g, h satisfy F(n,k) = F(n-1,k+1) + F(n-1,k-1)");
        for (int n = 1; n <= n_max; ++n) {
            for (int k = std::max(1, n % 2); k <= n; k += 2) {
                c.equal("f" + cell(n, k), f_sum(n, k), f_sum(n - 1, k + 1) + f_sum(n - 1, k - 1));
                c.equal("g" + cell(n, k), g_sum(n, k), g_sum(n - 1, k + 1) + g_sum(n - 1, k - 1));
                c.equal("h" + cell(n, k), h_sum(n, k), h_sum(n - 1, k + 1) + h_sum(n - 1, k - 1));
            }
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("f(n,0) = g(n,0) = h(n,0) = C_{n/2+1} - C_{n/2}");
        for (int n = 2; n <= n_max; n += 2) {
            const ExactRational t = q(catalan(n / 2 + 1) - catalan(n / 2));
            c.equal("f n=" + std::to_string(n), f_sum(n, 0), t);
            c.equal("g n=" + std::to_string(n), g_sum(n, 0), t);
            c.equal("h n=" + std::to_string(n), h_sum(n, 0), t);
            c.equal("i3(123) n=" + std::to_string(n + 1), f_sum(n, 0), q(i_once(n + 1, 3, p123)));
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("i(n,k) = sum_{f odd} i(n-f,k-1) C_{(f-1)/2} + f(n,k)");
        for (int n = 1; n <= n_max; ++n) {
            for (int k = std::max(1, n % 2); k <= n; k += 2) {
                ExactRational rhs = f_sum(n, k);
                for (int f = 1; f <= n - k; f += 2) rhs += q(i_once(n - f, k - 1, p321) * catalan((f - 1) / 2));
                c.equal(cell(n, k), q(i_once(n, k, p321)), rhs);
            }
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("recurrences agree with closed forms (b, a, i)");
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                c.equal("b" + cell(n, k), b_rec(n, k), i_avoid(n, k, p231));
                c.equal("a" + cell(n, k), a_rec(n, k), i_once(n, k, p231));
                c.equal("i" + cell(n, k), i321once_rec(n, k), i_once(n, k, p321));
            }
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("two-row and two-column tableau sums");
        for (int n = 1; n <= n_max; ++n) {
            for (int k = n % 2; k <= n; k += 2) {
                const int i = (n - k) / 2;
                c.equal("321 " + cell(n, k), i_avoid(n, k, p321), binomial(n, i) - binomial(n, i - 1));
            }
            if (n % 2 == 0) {
                ExactCount s = 0;
                for (int j = 0; j <= n / 2; j += 2) s += binomial(n, j) - binomial(n, j - 1);
                c.equal("i0(123) n=" + std::to_string(n), i_avoid(n, 0, p123), s);
                c.equal("i2(123) n=" + std::to_string(n), i_avoid(n, 2, p123), binomial(n, n / 2) - s);
            } else {
                ExactCount s = 0;
                for (int j = 0; j <= (n - 1) / 2; ++j) s += binomial(n, j) - binomial(n, j - 1);
                c.equal("i1(123) n=" + std::to_string(n), i_avoid(n, 1, p123), s);
            }
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("standard Young tableaux of shape (n-i,i) number C(n,i) - C(n,i-1)");
        for (int n = 1; n <= enum_max; ++n) {
            for (int i = 0; 2 * i <= n; ++i) {
                std::vector<int> shape{n - i};
                if (i > 0) shape.push_back(i);
                long count = 0;
                for_each_syt(shape, [&](const StandardYoungTableau&) { ++count; });
                c.equal("(" + std::to_string(n - i) + "," + std::to_string(i) + ")", ExactCount(count), binomial(n, i) - binomial(n, i - 1));
            }
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("|MDP(n;k)| closed form = enumeration = |D(n,k+2)|");
        for (int n = 0; n <= n_max; ++n) {
            for (int k = n % 2; k <= n; k += 2) {
                c.equal("paths" + cell(n, k), count_mdp(n, k), count_paths(n, k + 2));
                if (n <= enum_max) {
                    long count = 0;
                    for_each_mdp(n, k, [&](const ModifiedDyckPath&) { ++count; });
                    c.equal("enum" + cell(n, k), ExactCount(count), count_mdp(n, k));
                }
            }
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("totals over k");
        for (int n = 0; n <= n_max; ++n) {
            for (const Pattern& a : s3_patterns()) {
                ExactCount sa = 0, so = 0;
                for (int k = 0; k <= n; ++k) {
                    sa += i_avoid(n, k, a);
                    so += i_once(n, k, a);
                }
                c.equal("avoid " + a.str() + " n=" + std::to_string(n), i_avoid_total(n, a), sa);
                c.equal("once " + a.str() + " n=" + std::to_string(n), i_once_total(n, a), so);
            }
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("i_n(empty;231) = i_{2n-4}^2(empty;231) for even n >= 4");
        for (int n = 4; n <= n_max; n += 2) {
            c.equal("n=" + std::to_string(n), i_once_total(n, p231), i_once(2 * n - 4, 2, p231));
            c.equal("312 n=" + std::to_string(n), i_once_total(n, p312), i_once(2 * n - 4, 2, p312));
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("equality families");
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                c.equal("132=321" + cell(n, k), i_avoid(n, k, p132), i_avoid(n, k, p321));
                c.equal("213=321" + cell(n, k), i_avoid(n, k, p213), i_avoid(n, k, p321));
                c.equal("231=312" + cell(n, k), i_avoid(n, k, p231), i_avoid(n, k, p312));
                c.equal("once 132=213" + cell(n, k), i_once(n, k, p132), i_once(n, k, p213));
                c.equal("once 231=312" + cell(n, k), i_once(n, k, p231), i_once(n, k, p312));
                c.equal("321 = |D(n,k)|" + cell(n, k), i_avoid(n, k, p321), count_paths(n, k));
            }
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("i_{2n}^0(321) = i_{2n-1}^1(321) = C_n");
        for (int n = 1; 2 * n <= n_max; ++n) {
            c.equal("even n=" + std::to_string(n), i_avoid(2 * n, 0, p321), catalan(n));
            c.equal("odd n=" + std::to_string(n), i_avoid(2 * n - 1, 1, p321), catalan(n));
        }
        report.checks.push_back(c.done());
    }
    {
        Checker c("generating functions B_k, A_k and A_k = (k-1)x^3(1-x^2)B_{k-1}");
        const int kmax = std::min(n_max, 8);
        const auto one_minus_x2 = RationalSeries::polynomial(std::max(n_max, 0), {1, 0, -1});
        for (int k = 0; k <= kmax; ++k) {
            const auto b = series_B(k, n_max);
            const auto a = series_A(k, n_max);
            for (int n = 0; n <= n_max; ++n) {
                const ExactCount bn = n >= k ? i_avoid(n, k, p231) : ExactCount(0);
                const ExactCount an = n >= k ? i_once(n, k, p231) : ExactCount(0);
                c.equal("B" + std::to_string(k) + " x^" + std::to_string(n), b[n], q(bn));
                c.equal("A" + std::to_string(k) + " x^" + std::to_string(n), a[n], q(an));
            }
            if (k >= 1) {
                const auto factored = RationalSeries::monomial(n_max, 3, k - 1) * one_minus_x2 * series_B(k - 1, n_max);
                for (int n = 0; n <= n_max; ++n) c.equal("factor A" + std::to_string(k) + " x^" + std::to_string(n), a[n], factored[n]);
            }
        }
        report.checks.push_back(c.done());
    }
    return report;
}

}  // namespace rinv
