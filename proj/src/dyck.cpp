#include "rinv/dyck.hpp"

#include <algorithm>

namespace rinv {

PartialDyckPath::PartialDyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    for (Step s : steps_) {
        height_ += s == Step::Up ? 1 : -1;
        if (height_ < 0) throw DomainError("path falls below the x-axis");
    }
}

PartialDyckPath PartialDyckPath::parse(std::string_view word) {
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (char c : word) {
        switch (c) {
            case 'U': case 'u': steps.push_back(Step::Up); break;
            case 'D': case 'd': steps.push_back(Step::Down); break;
            case ' ': break;
            default: throw DomainError("unexpected step '" + std::string(1, c) + "'; expected U or D");
        }
    }
    return PartialDyckPath(std::move(steps));
}

int PartialDyckPath::max_height() const {
    int h = 0, best = 0;
    for (Step s : steps_) {
        h += s == Step::Up ? 1 : -1;
        best = std::max(best, h);
    }
    return best;
}

int PartialDyckPath::height_after(int i) const {
    int h = 0;
    for (int t = 0; t < i; ++t) h += steps_[static_cast<std::size_t>(t)] == Step::Up ? 1 : -1;
    return h;
}

std::string PartialDyckPath::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += static_cast<char>(s);
    return out;
}

ModifiedDyckPath::ModifiedDyckPath(PartialDyckPath head, PartialDyckPath tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
    if (tail_.length() == 0 || tail_.end_height() != 0) {
        throw DomainError("MDP tail must be a nonempty standard Dyck path");
    }
}

ModifiedDyckPath ModifiedDyckPath::parse(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw DomainError("MDP text form is 'head|tail'");
    return ModifiedDyckPath(PartialDyckPath::parse(text.substr(0, bar)), PartialDyckPath::parse(text.substr(bar + 1)));
}

std::string ModifiedDyckPath::str() const { return head_.str() + "|" + tail_.str(); }

namespace {

void paths_rec(int remaining, int height, int target, std::vector<Step>& cur,
               const std::function<void(const PartialDyckPath&)>& visit) {
    if (remaining == 0) {
        if (height == target) visit(PartialDyckPath(cur));
        return;
    }
    // Up is allowed while the target stays reachable.
    if (height + 1 - target <= remaining - 1) {
        cur.push_back(Step::Up);
        paths_rec(remaining - 1, height + 1, target, cur, visit);
        cur.pop_back();
    }
    if (height > 0) {
        cur.push_back(Step::Down);
        paths_rec(remaining - 1, height - 1, target, cur, visit);
        cur.pop_back();
    }
}

}  // namespace

void for_each_path(int n, int k, const std::function<void(const PartialDyckPath&)>& visit) {
    if (n < 0 || k < 0 || k > n || (n + k) % 2 != 0) return;
    std::vector<Step> cur;
    cur.reserve(static_cast<std::size_t>(n));
    paths_rec(n, 0, k, cur, visit);
}

std::vector<PartialDyckPath> enumerate_paths(int n, int k) {
    std::vector<PartialDyckPath> out;
    for_each_path(n, k, [&](const PartialDyckPath& p) { out.push_back(p); });
    return out;
}

ExactCount count_paths(int n, int k) {
    if (n < 0 || k < 0 || k > n || (n + k) % 2 != 0) return 0;
    ExactRational v = ExactRational(k + 1, n + 1) * ExactRational(binomial(n + 1, (n - k) / 2));
    return require_integral(v, "|D(n,k)|");
}

ExactCount d_count(int n, int j) {
    if (j < 0) throw DomainError("d_count requires j >= 0");
    return count_paths(2 * n - j - 1, j - 1);
}

int peaks(const PartialDyckPath& p) {
    const auto& s = p.steps();
    int count = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) count += s[i] == Step::Up && s[i + 1] == Step::Down;
    return count;
}

bool is_symmetric(const PartialDyckPath& p) {
    if (p.end_height() != 0) throw DomainError("is_symmetric is defined for paths ending at height 0");
    const auto& s = p.steps();
    const std::size_t len = s.size();
    for (std::size_t i = 0; i < len; ++i) {
        Step mirrored = s[len - 1 - i] == Step::Up ? Step::Down : Step::Up;
        if (s[i] != mirrored) return false;
    }
    return true;
}

void for_each_mdp(int n, int k, const std::function<void(const ModifiedDyckPath&)>& visit) {
    if (n < 0 || k < 0 || k > n || (n + k) % 2 != 0) return;
    for (int i = 1; i <= (n - k) / 2; ++i) {
        const auto tails = enumerate_paths(2 * i, 0);
        for_each_path(n - 2 * i, k, [&](const PartialDyckPath& head) {
            for (const auto& tail : tails) visit(ModifiedDyckPath(head, tail));
        });
    }
}

std::vector<ModifiedDyckPath> enumerate_mdp(int n, int k) {
    std::vector<ModifiedDyckPath> out;
    for_each_mdp(n, k, [&](const ModifiedDyckPath& m) { out.push_back(m); });
    return out;
}

ExactCount count_mdp(int n, int k) {
    if (n < 0 || k < 0 || k > n || (n + k) % 2 != 0) return 0;
    ExactRational v = ExactRational(k + 3, n + 1) * ExactRational(binomial(n + 1, (n - k) / 2 - 1));
    return require_integral(v, "|MDP(n;k)|");
}

namespace {

// Draws steps starting at (x0, y0) into a canvas indexed [row from bottom][column].
void draw(std::vector<std::string>& canvas, int x0, int y0, const std::vector<Step>& steps) {
    int y = y0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::size_t col = static_cast<std::size_t>(x0) + i;
        if (steps[i] == Step::Up) {
            canvas[static_cast<std::size_t>(y)][col] = '/';
            ++y;
        } else {
            --y;
            canvas[static_cast<std::size_t>(y)][col] = '\\';
        }
    }
}

std::string flatten(const std::vector<std::string>& canvas) {
    std::string out;
    for (auto it = canvas.rbegin(); it != canvas.rend(); ++it) {
        std::string line = *it;
        line.erase(line.find_last_not_of(' ') + 1);
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace

std::string render(const PartialDyckPath& p) {
    const int rows = std::max(1, p.max_height());
    std::vector<std::string> canvas(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(p.length()), ' '));
    draw(canvas, 0, 0, p.steps());
    return flatten(canvas);
}

std::string render(const ModifiedDyckPath& m) {
    const int rows = std::max({1, m.head().max_height(), m.tail().max_height()});
    std::vector<std::string> canvas(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(m.length()), ' '));
    draw(canvas, 0, 0, m.head().steps());
    draw(canvas, m.head().length(), 0, m.tail().steps());
    return flatten(canvas);
}

}  // namespace rinv
