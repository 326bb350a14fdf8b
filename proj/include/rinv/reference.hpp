#pragma once

#include <string>
#include <vector>

#include "rinv/formulas.hpp"

namespace rinv {

/// One reference table of i_n^k values for 0 <= k <= n <= 8. Every pattern
/// listed shares the table.
struct ReferenceTable {
    Mode mode;
    std::vector<std::string> patterns;
    std::vector<std::vector<int>> rows;  // rows[n][k]
};

/// The seven reference tables (avoidance for 123, 132/213/321, 231/312;
/// single containment for 123, 132/213, 231/312, 321).
const std::vector<ReferenceTable>& reference_tables();

struct CycleClassRow {
    std::string type;  // exponent notation, ascending lengths: "2^14^1"
    int avoiding_132;
    int avoiding_321;
};

/// Pattern-avoiding permutations of S_6 by cycle type.
const std::vector<CycleClassRow>& s6_cycle_table();

}  // namespace rinv
