#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rinv/bijections.hpp"
#include "rinv/enumerate.hpp"
#include "rinv/formulas.hpp"
#include "rinv/table.hpp"
#include "rinv/verify.hpp"

namespace py = pybind11;
using namespace rinv;

namespace {

py::object to_py(const ExactCount& c) {
    const std::string s = c.str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const ExactRational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(ExactCount(numerator(q))), to_py(ExactCount(denominator(q))));
}

// Permutations come in as "3 4 1 2" / "3412" or any sequence of ints.
Permutation to_perm(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return Permutation::parse(h.cast<std::string>());
    return Permutation(h.cast<std::vector<int>>());
}

py::tuple from_perm(const Permutation& p) {
    return py::cast(std::vector<int>(p.values().begin(), p.values().end()));
}

Pattern to_pattern(const std::string& s) { return Pattern::parse(s); }

Backend to_backend(const std::string& s) {
    if (s == "formula") return Backend::Formula;
    if (s == "oracle") return Backend::Oracle;
    throw DomainError("backend must be 'formula' or 'oracle'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pattern-restricted involutions: exact counts, bijections and checks";
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    // permutations
    m.def("is_involution", [](py::handle p) { return is_involution(to_perm(p)); });
    m.def("fixed_points", [](py::handle p) { return fixed_points(to_perm(p)); });
    m.def("occurrences", [](py::handle p, const std::string& a) { return to_py(occurrences(to_perm(p), to_pattern(a))); });
    m.def("reverse_conjugate", [](py::handle p) { return from_perm(reverse_conjugate(to_perm(p))); });
    m.def("cycle_type", [](py::handle p) { return cycle_type(to_perm(p)).str(); });
    m.def("cycle_notation", [](py::handle p) { return cycle_notation(to_perm(p)); });

    // brute force
    m.def("involutions", [](int n, std::optional<int> k) {
        py::list out;
        for_each_involution(n, k, [&](const Permutation& p) { out.append(from_perm(p)); });
        return out;
    }, py::arg("n"), py::arg("k") = py::none());
    m.def("count_avoiding", [](int n, int k, const std::string& a) { return to_py(count_avoiding(n, k, to_pattern(a))); });
    m.def("count_containing_once",
          [](int n, int k, const std::string& a) { return to_py(count_containing_once(n, k, to_pattern(a))); });
    m.def("count_avoiding_set", [](int n, int k, const std::vector<std::string>& patterns) {
        std::vector<Pattern> ps;
        for (const auto& s : patterns) ps.push_back(to_pattern(s));
        return to_py(count_avoiding_set(n, k, ps));
    });
    m.def("cycle_class_counts", [](int n, const std::string& a) {
        py::dict out;
        for (const auto& [type, count] : cycle_class_counts(n, to_pattern(a))) out[py::str(type.str())] = to_py(count);
        return out;
    });

    // closed forms
    m.def("i_avoid", [](int n, int k, const std::string& a) { return to_py(i_avoid(n, k, to_pattern(a))); });
    m.def("i_once", [](int n, int k, const std::string& a) { return to_py(i_once(n, k, to_pattern(a))); });
    m.def("i_avoid_total", [](int n, const std::string& a) { return to_py(i_avoid_total(n, to_pattern(a))); });
    m.def("i_once_total", [](int n, const std::string& a) { return to_py(i_once_total(n, to_pattern(a))); });
    m.def("evaluate", [](const std::string& stat, const std::string& a, int n, std::optional<int> k, const std::string& backend) {
        return to_py(evaluate(CountingStatistic{parse_mode(stat), to_pattern(a), n, k}, to_backend(backend)));
    }, py::arg("stat"), py::arg("pattern"), py::arg("n"), py::arg("k") = py::none(), py::arg("backend") = "formula");
    m.def("catalan", [](long long n) { return to_py(catalan(n)); });
    m.def("b_rec", [](int n, int k) { return to_py(b_rec(n, k)); });
    m.def("a_rec", [](int n, int k) { return to_py(a_rec(n, k)); });
    m.def("i321once_rec", [](int n, int k) { return to_py(i321once_rec(n, k)); });

    auto coefficients = [](const RationalSeries& s) {
        py::list out;
        for (int i = 0; i <= s.order(); ++i) out.append(to_py(s[i]));
        return out;
    };
    m.def("series_B", [coefficients](int k, int order) { return coefficients(series_B(k, order)); });
    m.def("series_A", [coefficients](int k, int order) { return coefficients(series_A(k, order)); });

    // tableaux
    m.def("tableau_of", [](py::handle p) { return tableau_of(to_perm(p)).rows(); });
    m.def("involution_of", [](const std::vector<std::vector<int>>& rows) {
        return from_perm(involution_of(StandardYoungTableau(rows)));
    });
    m.def("gamma_move", [](const std::vector<std::vector<int>>& rows) { return gamma_move(StandardYoungTableau(rows)).rows(); });
    m.def("count_syt", [](const std::vector<int>& shape) {
        long count = 0;
        for_each_syt(shape, [&](const StandardYoungTableau&) { ++count; });
        return count;
    });

    // paths
    m.def("enumerate_paths", [](int n, int k) {
        std::vector<std::string> out;
        for_each_path(n, k, [&](const PartialDyckPath& d) { out.push_back(d.str()); });
        return out;
    });
    m.def("count_paths", [](int n, int k) { return to_py(count_paths(n, k)); });
    m.def("count_mdp", [](int n, int k) { return to_py(count_mdp(n, k)); });
    m.def("render", [](const std::string& path) {
        if (path.find('|') != std::string::npos) return render(ModifiedDyckPath::parse(path));
        return render(PartialDyckPath::parse(path));
    });

    // bijections; paths are U/D strings, modified paths "head|tail"
    m.def("krattenthaler", [](py::handle p) { return krattenthaler(to_perm(p)).str(); });
    m.def("krattenthaler_inv", [](const std::string& d) { return from_perm(krattenthaler_inv(PartialDyckPath::parse(d))); });
    m.def("big_gamma", [](const std::string& d) { return big_gamma(PartialDyckPath::parse(d)).str(); });
    m.def("big_gamma_inv", [](const std::string& d) { return big_gamma_inv(PartialDyckPath::parse(d)).str(); });
    m.def("big_gamma_involution", [](py::handle p) { return from_perm(big_gamma_involution(to_perm(p))); });
    m.def("big_gamma_involution_inv", [](py::handle p) { return from_perm(big_gamma_involution_inv(to_perm(p))); });
    m.def("gamma_involution", [](py::handle p) { return from_perm(gamma_involution(to_perm(p))); });
    m.def("delta", [](py::handle p) { return delta(to_perm(p)).str(); });
    m.def("delta_inv", [](const std::string& d) { return from_perm(delta_inv(PartialDyckPath::parse(d))); });
    m.def("zeta", [](py::handle p) { return zeta(to_perm(p)).str(); });
    m.def("zeta_rows", [](py::handle p) {
        const auto r = zeta_rows(to_perm(p));
        return py::make_tuple(py::tuple(py::cast(r.up)), py::tuple(py::cast(r.down)));
    });
    m.def("zeta_inv", [](const std::string& d) { return from_perm(zeta_inv(PartialDyckPath::parse(d))); });
    m.def("mdp_to_partial", [](const std::string& s) { return mdp_to_partial(ModifiedDyckPath::parse(s)).str(); });
    m.def("partial_to_mdp", [](const std::string& d) { return partial_to_mdp(PartialDyckPath::parse(d)).str(); });

    // front-end operations
    m.def("table", [](const std::string& stat, const std::string& a, int n_max, const std::string& format,
                      const std::string& source) {
        const auto t = compute_table(parse_mode(stat), to_pattern(a), n_max, to_backend(source),
                                     OracleDepth::from_env().involutions);
        return format_table(t, parse_table_format(format));
    }, py::arg("stat"), py::arg("pattern"), py::arg("n_max"), py::arg("format") = "text", py::arg("source") = "formula");
    m.def("verify", [](int n_max, std::optional<std::vector<std::string>> sections) {
        std::vector<Section> chosen;
        if (sections) {
            for (const auto& s : *sections) chosen.push_back(parse_section(s));
        } else {
            chosen = all_sections();
        }
        const auto report = run_verify(n_max, chosen, OracleDepth::from_env().involutions);
        return py::make_tuple(report.passed(), report.str());
    }, py::arg("n_max") = 8, py::arg("sections") = py::none());
}
