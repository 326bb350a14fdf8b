#include "rinv/table.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace rinv {

TableFormat parse_table_format(const std::string& s) {
    if (s == "text") return TableFormat::Text;
    if (s == "csv") return TableFormat::Csv;
    if (s == "json") return TableFormat::Json;
    throw DomainError("unknown table format '" + s + "'; expected text, csv or json");
}

CountTable compute_table(Mode mode, const Pattern& pattern, int n_max, Backend backend, int oracle_depth) {
    const auto& s3 = s3_patterns();
    if (std::find(s3.begin(), s3.end(), pattern) == s3.end()) {
        throw DomainError("table supports patterns of length three only, got " + pattern.str());
    }
    if (n_max < 0) throw DomainError("n-max must be nonnegative");
    if (backend == Backend::Oracle && n_max > oracle_depth) {
        throw DomainError("oracle depth is " + std::to_string(oracle_depth) + ", requested n-max " +
                          std::to_string(n_max));
    }
    CountTable t{mode, pattern, {}};
    for (int n = 0; n <= n_max; ++n) {
        std::vector<ExactCount> row;
        for (int k = 0; k <= n; ++k) row.push_back(evaluate(CountingStatistic{mode, pattern, n, k}, backend));
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

nlohmann::ordered_json json_value(const ExactCount& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(v);
    }
    return v.str();
}

}  // namespace

std::string format_table(const CountTable& t, TableFormat format) {
    std::ostringstream out;
    switch (format) {
        case TableFormat::Text:
            for (const auto& row : t.rows) {
                for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
                out << '\n';
            }
            break;
        case TableFormat::Csv: {
            const int width = t.n_max() + 1;
            out << 'n';
            for (int k = 0; k < width; ++k) out << ',' << k;
            out << '\n';
            for (std::size_t n = 0; n < t.rows.size(); ++n) {
                out << n;
                for (int k = 0; k < width; ++k) {
                    out << ',';
                    if (static_cast<std::size_t>(k) < t.rows[n].size()) out << t.rows[n][static_cast<std::size_t>(k)];
                }
                out << '\n';
            }
            break;
        }
        case TableFormat::Json: {
            nlohmann::ordered_json j;
            j["stat"] = to_string(t.mode);
            j["pattern"] = t.pattern.str();
            j["rows"] = nlohmann::ordered_json::array();
            for (const auto& row : t.rows) {
                auto r = nlohmann::ordered_json::array();
                for (const auto& v : row) r.push_back(json_value(v));
                j["rows"].push_back(std::move(r));
            }
            out << j.dump() << '\n';
            break;
        }
    }
    return out.str();
}

}  // namespace rinv
