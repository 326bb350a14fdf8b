#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rinv/perm.hpp"

namespace rinv {

/// Standard Young tableau in English row convention: rows strictly increase
/// left to right, columns strictly increase downward, row lengths weakly
/// decrease, entries are exactly 1..n.
class StandardYoungTableau {
public:
    StandardYoungTableau() = default;
    /// Throws DomainError if the rows do not form a standard Young tableau.
    explicit StandardYoungTableau(std::vector<std::vector<int>> rows);
    /// Builds a tableau from its columns (left to right, each top to bottom).
    static StandardYoungTableau from_columns(const std::vector<std::vector<int>>& columns);
    /// One row per line, entries space-separated; ';' also separates rows.
    static StandardYoungTableau parse(std::string_view text);

    int size() const { return n_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::vector<std::vector<int>> columns() const;
    std::vector<int> shape() const;

    /// Row form: one line per row.
    std::string str() const;
    /// Column form: one line per column.
    std::string column_str() const;

    friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;
    friend auto operator<=>(const StandardYoungTableau&, const StandardYoungTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
    int n_ = 0;
};

/// Robinson-Schensted row-insertion tableau of an involution (insertion and
/// recording tableaux coincide). Throws DomainError for non-involutions.
StandardYoungTableau tableau_of(const Permutation& p);

/// Insertion tableau of any permutation.
StandardYoungTableau insertion_tableau(const Permutation& p);

/// The unique involution whose tableau is t.
Permutation involution_of(const StandardYoungTableau& t);

/// Moves the largest entry n to the bottom of the other column.
/// Requires at most two columns of equal length parity with n at the
/// bottom of its column.
StandardYoungTableau gamma_move(const StandardYoungTableau& t);

/// All SYT of the given shape, in lexicographic order of the row-index word.
void for_each_syt(const std::vector<int>& shape, const std::function<void(const StandardYoungTableau&)>& visit);
std::vector<StandardYoungTableau> enumerate_syt(const std::vector<int>& shape);

}  // namespace rinv
