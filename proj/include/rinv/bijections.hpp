#pragma once

#include <utility>
#include <vector>

#include "rinv/dyck.hpp"
#include "rinv/perm.hpp"
#include "rinv/syt.hpp"

namespace rinv {

// All maps check their domain up front and throw DomainError on violation.

/// Krattenthaler's map S_n(123) -> D(2n, 0). Reading p right to left, each
/// right-to-left maximum m_i contributes m_i - m_{i-1} up-steps and the block
/// w_i before it contributes |w_i| + 1 down-steps.
PartialDyckPath krattenthaler(const Permutation& p);
Permutation krattenthaler_inv(const PartialDyckPath& d);

/// Flips the valley at x = n (down-step ending at x = n, then an up-step)
/// of a path in D(2n, 0) into a peak.
PartialDyckPath big_gamma(const PartialDyckPath& d);
/// Flips the peak at x = n back into a valley.
PartialDyckPath big_gamma_inv(const PartialDyckPath& d);

/// The induced bijection I_n^0(123) -> I_n^2(123), K^-1 . big_gamma . K.
Permutation big_gamma_involution(const Permutation& p);
Permutation big_gamma_involution_inv(const Permutation& p);

/// gamma_move carried to involutions through their tableaux. Its own inverse.
Permutation gamma_involution(const Permutation& p);

/// I_n^k(321) -> D(n, k): step i is up iff p(i) >= i.
PartialDyckPath delta(const Permutation& p);
/// Couples each down-step, scanning right to left, with the closest
/// uncoupled up-step to its left.
Permutation delta_inv(const PartialDyckPath& d);

/// Row sizes (u_1..u_t) and (d_1..d_t) of the up/down column construction.
struct ZetaRows {
    std::vector<int> up;
    std::vector<int> down;
};

/// Runs the up column / down column construction on p in I_n^k(213).
ZetaRows zeta_rows(const Permutation& p);
/// I_n^k(213) -> D(n, k): u^{u_1} d^{d_1} ... u^{u_t} d^{d_t}.
PartialDyckPath zeta(const Permutation& p);
/// Ups labelled 1..u left to right, downs u+1..n right to left; each matched
/// up/down pair becomes a transposition of labels, each unmatched up a fixed point.
Permutation zeta_inv(const PartialDyckPath& d);

/// Step-index pairs (0-based up index, down index) of tunnel matching:
/// an up-step from height h pairs with the first later down-step back to h.
std::vector<std::pair<int, int>> matched_steps(const PartialDyckPath& d);

/// MDP(n; k) -> D(n, k + 2): head, one up-step, tail without its last step.
PartialDyckPath mdp_to_partial(const ModifiedDyckPath& m);
/// D(n, k + 2) -> MDP(n; k), k >= 0.
ModifiedDyckPath partial_to_mdp(const PartialDyckPath& d);

}  // namespace rinv
