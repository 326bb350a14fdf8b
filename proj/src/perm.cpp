#include "rinv/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rinv {

namespace {

bool is_rearrangement(const std::vector<int>& v) {
    std::vector<char> seen(v.size() + 1, 0);
    for (int x : v) {
        if (x < 1 || x > static_cast<int>(v.size()) || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

std::vector<int> parse_ints(std::string_view text) {
    std::vector<int> out;
    bool has_space = text.find_first_of(" \t,") != std::string_view::npos;
    if (!has_space) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw DomainError("unexpected character '" + std::string(1, c) + "' in permutation");
            }
            out.push_back(c - '0');
        }
        return out;
    }
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw DomainError("cannot parse '" + tok + "' as an integer");
        }
        if (used != tok.size()) throw DomainError("cannot parse '" + tok + "' as an integer");
        out.push_back(v);
    }
    return out;
}

// Counts index subsequences matching `pat`, extending partial matches only
// while they stay order-isomorphic to the pattern prefix.
struct OccurrenceCounter {
    std::span<const int> p;
    std::span<const int> pat;
    std::size_t limit;
    std::size_t found = 0;
    std::vector<int> chosen;

    bool consistent(int value) const {
        const std::size_t j = chosen.size();
        for (std::size_t t = 0; t < j; ++t) {
            if ((pat[t] < pat[j]) != (chosen[t] < value)) return false;
        }
        return true;
    }

    void run(std::size_t start) {
        if (chosen.size() == pat.size()) {
            ++found;
            return;
        }
        const std::size_t need = pat.size() - chosen.size();
        for (std::size_t i = start; i + need <= p.size() && found < limit; ++i) {
            if (!consistent(p[i])) continue;
            chosen.push_back(p[i]);
            run(i + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (!is_rearrangement(values_)) {
        throw DomainError("not a permutation of 1.." + std::to_string(values_.size()));
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_ints(text)); }

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

std::string Permutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

Pattern::Pattern(std::vector<int> values) : values_(std::move(values)) {
    if (values_.size() < 2 || !is_rearrangement(values_)) {
        throw DomainError("a pattern must be a permutation of length at least 2");
    }
}

Pattern Pattern::parse(std::string_view digits) { return Pattern(parse_ints(digits)); }

std::string Pattern::str() const {
    std::string out;
    bool wide = values_.size() > 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (wide && i) out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

const std::vector<Pattern>& s3_patterns() {
    static const std::vector<Pattern> all = {
        Pattern({1, 2, 3}), Pattern({1, 3, 2}), Pattern({2, 1, 3}),
        Pattern({2, 3, 1}), Pattern({3, 1, 2}), Pattern({3, 2, 1}),
    };
    return all;
}

int CycleType::total() const {
    int s = 0;
    for (int l : lengths) s += l;
    return s;
}

std::string CycleType::str() const {
    std::map<int, int> mult;
    for (int l : lengths) ++mult[l];
    std::string out;
    for (auto [len, count] : mult) out += std::to_string(len) + "^" + std::to_string(count);
    return out;
}

std::vector<int> fixed_points(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i) {
        if (p.at(i) == i) out.push_back(i);
    }
    return out;
}

int fixed_point_count(const Permutation& p) {
    int k = 0;
    for (int i = 1; i <= p.size(); ++i) k += p.at(i) == i;
    return k;
}

bool is_involution(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i) {
        if (p.at(p.at(i)) != i) return false;
    }
    return true;
}

std::size_t occurrences_up_to(const Permutation& p, const Pattern& a, std::size_t limit) {
    if (a.size() > p.size() || limit == 0) return 0;
    OccurrenceCounter c{p.values(), a.values(), limit, 0, {}};
    c.chosen.reserve(static_cast<std::size_t>(a.size()));
    c.run(0);
    return std::min(c.found, limit);
}

ExactCount occurrences(const Permutation& p, const Pattern& a) {
    return ExactCount(occurrences_up_to(p, a, static_cast<std::size_t>(-1)));
}

Permutation reverse_conjugate(const Permutation& p) {
    const int n = p.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = n + 1 - p.at(n + 1 - i);
    return Permutation(std::move(out));
}

CycleType cycle_type(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    CycleType t;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p.at(j)) {
            seen[static_cast<std::size_t>(j)] = 1;
            ++len;
        }
        t.lengths.push_back(len);
    }
    std::sort(t.lengths.rbegin(), t.lengths.rend());
    return t;
}

std::string cycle_notation(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::string out;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        out += '(';
        bool first = true;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p.at(j)) {
            seen[static_cast<std::size_t>(j)] = 1;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
        }
        out += ')';
    }
    return out;
}

}  // namespace rinv
