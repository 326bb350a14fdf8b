#pragma once

#include <string>
#include <vector>

#include "rinv/formulas.hpp"

namespace rinv {

enum class Section { Formulas, Bijections, Identities, Tables, Cycles };

const std::vector<Section>& all_sections();
std::string to_string(Section s);
/// Accepts the lowercase section names.
Section parse_section(const std::string& s);

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    /// One line per check plus its notes; failing checks name their first failing cell.
    std::string str() const;
};

/// Runs the requested sections for n <= n_max. Brute-force parts stop at
/// the oracle depth; each check also has its own natural ceiling.
VerifyReport run_verify(int n_max, const std::vector<Section>& sections, int oracle_depth = 10);

// Exhaustive checks, usable on their own.

/// Closed forms against brute force for every pattern of length three.
CheckResult check_formulas_vs_oracle(int n_max);
/// Every reference table against the chosen backend.
CheckResult check_reference_tables(int n_max, Backend backend);
/// The S_6 cycle-type table for 132 and 321.
CheckResult check_cycle_table();

/// delta / delta_inv over I_n^k(321) and D(n, k).
CheckResult check_delta(int n_max);
/// zeta / zeta_inv over I_n^k(213) and D(n, k).
CheckResult check_zeta(int n_max);
/// krattenthaler / krattenthaler_inv over S_n(123) and D(2n, 0).
CheckResult check_krattenthaler(int n_max);
/// gamma_involution as a bijection I_n^0(123) -> I_n^2(123), even n.
CheckResult check_gamma(int n_max);
/// big_gamma_involution as a bijection I_n^0(123) -> I_n^2(123), even n.
CheckResult check_big_gamma(int n_max);
/// MDP(n; k) <-> D(n, k + 2).
CheckResult check_mdp(int n_max);
/// K-images of 123-avoiding involutions: symmetric, peak parity by fixed points.
CheckResult check_krattenthaler_involutions(int n_max);
/// Images of delta_inv avoid 321 and images of zeta_inv avoid 213.
CheckResult check_inverse_images(int n_max);

}  // namespace rinv
