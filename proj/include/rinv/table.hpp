#pragma once

#include <string>
#include <vector>

#include "rinv/formulas.hpp"

namespace rinv {

enum class TableFormat { Text, Csv, Json };

/// Accepts "text", "csv" and "json".
TableFormat parse_table_format(const std::string& s);

/// Triangular table rows[n][k], 0 <= k <= n <= n_max.
struct CountTable {
    Mode mode = Mode::Avoid;
    Pattern pattern{std::vector<int>{1, 2, 3}};
    std::vector<std::vector<ExactCount>> rows;

    int n_max() const { return static_cast<int>(rows.size()) - 1; }
};

/// Throws DomainError for patterns outside S_3, or when the oracle backend
/// is asked for more rows than `depth` allows.
CountTable compute_table(Mode mode, const Pattern& pattern, int n_max, Backend backend, int oracle_depth);

/// Text: one row per line, values separated by single spaces.
/// Csv: header "n,0,1,...", blanks above the diagonal.
/// Json: {"stat","pattern","rows"}; values past 2^64 - 1 become decimal strings.
std::string format_table(const CountTable& t, TableFormat format);

}  // namespace rinv
