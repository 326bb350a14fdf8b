#include "rinv/reference.hpp"

namespace rinv {

const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = {
        {Mode::Avoid,
         {"123"},
         {{1},
          {0, 1},
          {1, 0, 1},
          {0, 3, 0, 0},
          {3, 0, 3, 0, 0},
          {0, 10, 0, 0, 0, 0},
          {10, 0, 10, 0, 0, 0, 0},
          {0, 35, 0, 0, 0, 0, 0, 0},
          {35, 0, 35, 0, 0, 0, 0, 0, 0}}},
        {Mode::Avoid,
         {"132", "321", "213"},
         {{1},
          {0, 1},
          {1, 0, 1},
          {0, 2, 0, 1},
          {2, 0, 3, 0, 1},
          {0, 5, 0, 4, 0, 1},
          {5, 0, 9, 0, 5, 0, 1},
          {0, 14, 0, 14, 0, 6, 0, 1},
          {14, 0, 28, 0, 20, 0, 7, 0, 1}}},
        {Mode::Avoid,
         {"231", "312"},
         {{1},
          {0, 1},
          {1, 0, 1},
          {0, 3, 0, 1},
          {2, 0, 5, 0, 1},
          {0, 8, 0, 7, 0, 1},
          {4, 0, 18, 0, 9, 0, 1},
          {0, 20, 0, 32, 0, 11, 0, 1},
          {8, 0, 56, 0, 50, 0, 13, 0, 1}}},
        {Mode::ContainOnce,
         {"123"},
         {{0},
          {0, 0},
          {0, 0, 0},
          {0, 0, 0, 1},
          {0, 0, 0, 0, 0},
          {0, 0, 0, 3, 0, 0},
          {0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 9, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0}}},
        {Mode::ContainOnce,
         {"132", "213"},
         {{0},
          {0, 0},
          {0, 0, 0},
          {0, 1, 0, 0},
          {0, 0, 1, 0, 0},
          {0, 2, 0, 1, 0, 0},
          {0, 0, 3, 0, 1, 0, 0},
          {0, 5, 0, 4, 0, 1, 0, 0},
          {0, 0, 9, 0, 5, 0, 1, 0, 0}}},
        {Mode::ContainOnce,
         {"231", "312"},
         {{0},
          {0, 0},
          {0, 0, 0},
          {0, 0, 0, 0},
          {0, 0, 1, 0, 0},
          {0, 0, 0, 2, 0, 0},
          {0, 0, 2, 0, 3, 0, 0},
          {0, 0, 0, 8, 0, 4, 0, 0},
          {0, 0, 5, 0, 18, 0, 5, 0, 0}}},
        {Mode::ContainOnce,
         {"321"},
         {{0},
          {0, 0},
          {0, 0, 0},
          {0, 1, 0, 0},
          {0, 0, 2, 0, 0},
          {0, 4, 0, 3, 0, 0},
          {0, 0, 10, 0, 4, 0, 0},
          {0, 14, 0, 18, 0, 5, 0, 0},
          {0, 0, 40, 0, 28, 0, 6, 0, 0}}},
    };
    return tables;
}

const std::vector<CycleClassRow>& s6_cycle_table() {
    static const std::vector<CycleClassRow> rows = {
        {"1^6", 1, 1},      {"1^42^1", 5, 5},      {"1^33^1", 8, 8},  {"1^22^2", 9, 9},
        {"1^24^1", 12, 12}, {"1^12^13^1", 20, 20}, {"1^15^1", 20, 20}, {"2^3", 5, 5},
        {"2^14^1", 20, 18}, {"3^2", 8, 10},        {"6^1", 24, 24},
    };
    return rows;
}

}  // namespace rinv
