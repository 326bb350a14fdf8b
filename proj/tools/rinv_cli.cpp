// rinv: tables, verification, bijections and path rendering for
// pattern-restricted involutions.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rinv/bijections.hpp"
#include "rinv/enumerate.hpp"
#include "rinv/table.hpp"
#include "rinv/verify.hpp"

namespace {

constexpr int kUsageError = 2;

bool looks_like_path(const std::string& s) {
    return !s.empty() && s.find_first_not_of("UDud ") == std::string::npos;
}

bool looks_like_tableau(const std::string& s) { return s.find_first_of(";\n") != std::string::npos; }

struct BijOutput {
    std::string text;
    std::vector<std::string> art;
};

std::string permutation_line(const rinv::Permutation& p, bool cycles) {
    return cycles ? p.str() + "\n" + rinv::cycle_notation(p) : p.str();
}

BijOutput apply_bijection(const std::string& name, const std::string& input, bool cycles) {
    using namespace rinv;
    if (name == "k") {
        auto d = krattenthaler(Permutation::parse(input));
        return {d.str(), {render(d)}};
    }
    if (name == "k-inv") {
        auto d = PartialDyckPath::parse(input);
        return {permutation_line(krattenthaler_inv(d), cycles), {render(d)}};
    }
    if (name == "gamma") {
        if (looks_like_tableau(input)) {
            std::string rows = gamma_move(StandardYoungTableau::parse(input)).str();
            rows.pop_back();
            return {rows, {}};
        }
        return {permutation_line(gamma_involution(Permutation::parse(input)), cycles), {}};
    }
    if (name == "big-gamma" || name == "big-gamma-inv") {
        const bool inv = name == "big-gamma-inv";
        if (looks_like_path(input)) {
            auto d = PartialDyckPath::parse(input);
            auto out = inv ? big_gamma_inv(d) : big_gamma(d);
            return {out.str(), {render(d), render(out)}};
        }
        auto p = Permutation::parse(input);
        auto q = inv ? big_gamma_involution_inv(p) : big_gamma_involution(p);
        return {permutation_line(q, cycles), {render(krattenthaler(p)), render(krattenthaler(q))}};
    }
    if (name == "delta") {
        auto d = delta(Permutation::parse(input));
        return {d.str(), {render(d)}};
    }
    if (name == "delta-inv") {
        auto d = PartialDyckPath::parse(input);
        return {permutation_line(delta_inv(d), cycles), {render(d)}};
    }
    if (name == "zeta") {
        auto d = zeta(Permutation::parse(input));
        return {d.str(), {render(d)}};
    }
    if (name == "zeta-inv") {
        auto d = PartialDyckPath::parse(input);
        return {permutation_line(zeta_inv(d), cycles), {render(d)}};
    }
    if (name == "mdp") {
        auto m = ModifiedDyckPath::parse(input);
        auto d = mdp_to_partial(m);
        return {d.str(), {render(m), render(d)}};
    }
    if (name == "mdp-inv") {
        auto d = PartialDyckPath::parse(input);
        auto m = partial_to_mdp(d);
        return {m.str(), {render(d), render(m)}};
    }
    throw DomainError("unknown bijection '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern-restricted involutions: tables, verification and bijections"};
    app.require_subcommand(1);
    const int default_depth = rinv::OracleDepth::from_env().involutions;

    std::string stat = "avoid", pattern, format = "text", source = "formula", out_file;
    int table_n_max = 8;
    auto* table = app.add_subcommand("table", "Triangular table of i_n^k values for 0 <= k <= n <= n-max");
    table->add_option("--stat", stat, "avoid or once")->check(CLI::IsMember({"avoid", "once"}));
    table->add_option("--pattern", pattern, "Pattern of length three, e.g. 132")->required();
    table->add_option("--n-max", table_n_max, "Largest n")->check(CLI::NonNegativeNumber);
    table->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--source", source, "formula or oracle")->check(CLI::IsMember({"formula", "oracle"}));
    table->add_option("--out", out_file, "Write to this file instead of stdout");

    int verify_n_max = 8;
    std::vector<std::string> sections;
    auto* verify = app.add_subcommand("verify", "Cross-check formulas, bijections, identities and reference tables");
    verify->add_option("--n-max", verify_n_max, "Largest n")->check(CLI::NonNegativeNumber);
    verify->add_option("--sections", sections, "formulas, bijections, identities, tables, cycles")->delimiter(',');

    std::string bij_name, bij_input;
    bool bij_render = false, bij_cycles = false;
    auto* bij = app.add_subcommand("bij", "Apply a bijection to one object");
    bij->add_option("name", bij_name, "k, k-inv, gamma, big-gamma, big-gamma-inv, delta, delta-inv, zeta, zeta-inv, mdp, mdp-inv")
        ->required()
        ->check(CLI::IsMember({"k", "k-inv", "gamma", "big-gamma", "big-gamma-inv", "delta", "delta-inv", "zeta",
                               "zeta-inv", "mdp", "mdp-inv"}));
    bij->add_option("input", bij_input, "Permutation, path, head|tail or tableau rows separated by ';'")->required();
    bij->add_flag("--render", bij_render, "Append ASCII art of the paths involved");
    bij->add_flag("--cycles", bij_cycles, "Also print permutation results in cycle notation");

    std::string render_input;
    auto* render_cmd = app.add_subcommand("render", "Draw a path (UUDU...) or modified path (head|tail)");
    render_cmd->add_option("path", render_input, "Path word")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) {
            const auto t = rinv::compute_table(rinv::parse_mode(stat), rinv::Pattern::parse(pattern), table_n_max,
                                               source == "oracle" ? rinv::Backend::Oracle : rinv::Backend::Formula,
                                               default_depth);
            const std::string text = rinv::format_table(t, rinv::parse_table_format(format));
            if (out_file.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(out_file);
                if (!f) throw rinv::DomainError("cannot open " + out_file);
                f << text;
            }
            return 0;
        }
        if (verify->parsed()) {
            std::vector<rinv::Section> chosen;
            for (const auto& s : sections) chosen.push_back(rinv::parse_section(s));
            if (chosen.empty()) chosen = rinv::all_sections();
            const auto report = rinv::run_verify(verify_n_max, chosen, default_depth);
            std::cout << report.str();
            return report.passed() ? 0 : 1;
        }
        if (bij->parsed()) {
            const auto out = apply_bijection(bij_name, bij_input, bij_cycles);
            std::cout << out.text << '\n';
            if (bij_render) {
                for (const auto& art : out.art) std::cout << '\n' << art;
            }
            return 0;
        }
        if (render_cmd->parsed()) {
            if (render_input.find('|') != std::string::npos) {
                std::cout << rinv::render(rinv::ModifiedDyckPath::parse(render_input));
            } else {
                std::cout << rinv::render(rinv::PartialDyckPath::parse(render_input));
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
