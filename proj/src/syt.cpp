#include "rinv/syt.hpp"

#include <algorithm>
#include <sstream>

namespace rinv {

namespace {

bool valid_tableau(const std::vector<std::vector<int>>& rows, int& n_out) {
    int n = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
            if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
        }
        n += static_cast<int>(rows[r].size());
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& row : rows) {
        for (int x : row) {
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) return false;
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }
    n_out = n;
    return true;
}

// Row insertion of x; returns the row index of the newly created box.
std::size_t row_insert(std::vector<std::vector<int>>& rows, int x) {
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            return r;
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return r;
        }
        std::swap(*it, x);
    }
}

void syt_rec(const std::vector<int>& shape, int next, int n, std::vector<std::vector<int>>& rows,
             const std::function<void(const StandardYoungTableau&)>& visit) {
    if (next > n) {
        visit(StandardYoungTableau(rows));
        return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
        const std::size_t len = rows[r].size();
        if (len >= static_cast<std::size_t>(shape[r])) continue;
        if (r > 0 && rows[r - 1].size() <= len) continue;
        rows[r].push_back(next);
        syt_rec(shape, next + 1, n, rows, visit);
        rows[r].pop_back();
    }
}

}  // namespace

StandardYoungTableau::StandardYoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (!valid_tableau(rows_, n_)) throw DomainError("not a standard Young tableau");
}

StandardYoungTableau StandardYoungTableau::from_columns(const std::vector<std::vector<int>>& columns) {
    std::vector<std::vector<int>> rows;
    for (const auto& col : columns) {
        if (rows.size() < col.size()) rows.resize(col.size());
        for (std::size_t r = 0; r < col.size(); ++r) rows[r].push_back(col[r]);
    }
    return StandardYoungTableau(std::move(rows));
}

StandardYoungTableau StandardYoungTableau::parse(std::string_view text) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ';', '\n');
    std::istringstream lines(s);
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream in(line);
        std::vector<int> row;
        int x = 0;
        while (in >> x) row.push_back(x);
        if (!in.eof()) throw DomainError("cannot parse tableau row '" + line + "'");
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return StandardYoungTableau(std::move(rows));
}

std::vector<std::vector<int>> StandardYoungTableau::columns() const {
    std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_.front().size());
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    }
    return cols;
}

std::vector<int> StandardYoungTableau::shape() const {
    std::vector<int> s;
    for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
    return s;
}

namespace {
std::string lines_of(const std::vector<std::vector<int>>& seqs) {
    std::string out;
    for (const auto& seq : seqs) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(seq[i]);
        }
        out += '\n';
    }
    return out;
}
}  // namespace

std::string StandardYoungTableau::str() const { return lines_of(rows_); }
std::string StandardYoungTableau::column_str() const { return lines_of(columns()); }

StandardYoungTableau insertion_tableau(const Permutation& p) {
    std::vector<std::vector<int>> rows;
    for (int x : p.values()) row_insert(rows, x);
    return StandardYoungTableau(std::move(rows));
}

StandardYoungTableau tableau_of(const Permutation& p) {
    if (!is_involution(p)) throw DomainError("tableau_of: not an involution");
    return insertion_tableau(p);
}

Permutation involution_of(const StandardYoungTableau& t) {
    const int n = t.size();
    auto insertion = t.rows();
    auto recording = t.rows();
    std::vector<int> image(static_cast<std::size_t>(n), 0);
    for (int m = n; m >= 1; --m) {
        // m is the largest entry left in the recording tableau, so it ends a row.
        std::size_t r = 0;
        while (recording[r].back() != m) ++r;
        recording[r].pop_back();
        if (recording[r].empty()) recording.pop_back();

        int x = insertion[r].back();
        insertion[r].pop_back();
        if (insertion[r].empty()) insertion.pop_back();
        while (r > 0) {
            --r;
            auto& row = insertion[r];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            --it;  // largest entry smaller than x
            std::swap(*it, x);
        }
        image[static_cast<std::size_t>(m - 1)] = x;
    }
    Permutation p(std::move(image));
    if (!is_involution(p)) throw std::logic_error("involution_of: reconstruction is not an involution");
    return p;
}

StandardYoungTableau gamma_move(const StandardYoungTableau& t) {
    const int n = t.size();
    if (n == 0) throw DomainError("gamma_move: empty tableau");
    auto cols = t.columns();
    if (cols.size() > 2) throw DomainError("gamma_move: tableau has more than two columns");
    if (cols.size() == 1) cols.emplace_back();
    if ((cols[0].size() - cols[1].size()) % 2 != 0) {
        throw DomainError("gamma_move: column lengths differ in parity");
    }
    std::size_t from = cols[0].back() == n ? 0 : 1;
    if (cols[from].empty() || cols[from].back() != n) {
        throw DomainError("gamma_move: n is not at the bottom of a column");
    }
    cols[from].pop_back();
    cols[1 - from].push_back(n);
    if (cols[1].size() > cols[0].size()) throw DomainError("gamma_move: move breaks the tableau shape");
    if (cols[1].empty()) cols.pop_back();
    if (cols.size() == 2 && cols[0].empty()) throw DomainError("gamma_move: move breaks the tableau shape");
    return StandardYoungTableau::from_columns(cols);
}

void for_each_syt(const std::vector<int>& shape, const std::function<void(const StandardYoungTableau&)>& visit) {
    int n = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (shape[r] <= 0 || (r > 0 && shape[r] > shape[r - 1])) {
            throw DomainError("enumerate_syt: shape is not a partition");
        }
        n += shape[r];
    }
    std::vector<std::vector<int>> rows(shape.size());
    syt_rec(shape, 1, n, rows, visit);
}

std::vector<StandardYoungTableau> enumerate_syt(const std::vector<int>& shape) {
    std::vector<StandardYoungTableau> out;
    for_each_syt(shape, [&](const StandardYoungTableau& t) { out.push_back(t); });
    return out;
}

}  // namespace rinv
