#pragma once

#include <span>

#include "domtab/report.hpp"
#include "domtab/tableau.hpp"

namespace domtab {

/// The symmetric-group involution s_i, 1 <= i <= n-1, defined by the recursion
/// s_1 = t_1 and s_i = p_i s_{i-1} p_i^{-1}. The s_i satisfy the braid and
/// distant-commutation relations and swap weight coordinates i, i+1.
tableau s_action(const tableau& T, int i);

/// sigma_i = t_i s_{i-1} s_{i+1} t_i for n >= 4, 2 <= i <= n-2. An involution
/// commuting with D exactly when i = n (mod 2); sigma_{n-2}, sigma_{n-4}, ...
/// generate the action on layer-fixed tableaux.
tableau sigma_action(const tableau& T, int i);

/// tau_k = s_k s_{n-k} for 1 <= k <= n/2 - 1; commutes with evacuation and
/// generates the action on self-evacuating tableaux.
tableau tau_action(const tableau& T, int k);

/// Checks that sigma_{n-2i} maps the domino tableaux of shape/weight
/// (shape, beta') bijectively onto those of weight (i,i+1)(beta'), the target
/// side counted independently.
verification_report domino_weight_action_check(const partition& shape,
                                               std::span<const int> beta_prime,
                                               int i, int n);

} // namespace domtab
