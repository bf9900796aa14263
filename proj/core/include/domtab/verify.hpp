#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "domtab/operators.hpp"
#include "domtab/report.hpp"

namespace domtab {

/// Number of tableaux of the given shape and weight, by enumeration.
std::int64_t kostka(const partition& shape, std::span<const int> beta);

/// Number of domino tableaux of the given shape and weight, by enumeration.
std::int64_t kostka2(const partition& shape, std::span<const int> beta_prime, int n);

/// Number of self-evacuating tableaux of the given shape and weight, by
/// enumeration (0 whenever beta is not palindromic).
std::int64_t count_self_evacuating(const partition& shape, std::span<const int> beta);

/// Applies both words to every tableau of the domain and compares. Sweeps are
/// shardable; the reported witness is always the least one in enumeration
/// order regardless of thread count.
verification_report check_identity(const operator_word& lhs, const operator_word& rhs,
                                   const domain_bounds& domain, int threads = 1);

/// Maps the domino tableaux of (shape, beta') through P and verifies each image
/// is self-evacuating of the palindromic weight, that the map is injective, and
/// that the image count equals the independently counted self-evacuating set.
verification_report check_bijection_thm12(const partition& shape,
                                          std::span<const int> beta_prime, int n);

/// Signed monomial tables over the variables that survive the alternating
/// substitution (one per layer); keys are exponent vectors, zero coefficients
/// are never stored.
using signed_monomial_table = std::map<std::vector<int>, std::int64_t>;

/// The Schur sum of the shape under the alternating substitution: each tableau
/// contributes its signed monomial, adjacent variable pairs collapsing onto the
/// layer variables (for odd n the unpaired lowest variable keeps its exponent).
signed_monomial_table schur_specialization_table(const partition& shape, int n);

/// The domino side: exponent vector (2b'_1, 2b'_2, ..., [b'_m]) with
/// coefficient kostka2(shape, beta') for every admissible beta'.
signed_monomial_table domino_count_table(const partition& shape, int n);

/// Verifies the two tables agree up to one global sign (recorded in the report
/// detail); both-empty counts as total cancellation and verifies.
verification_report check_schur_specialization(const partition& shape, int n);

/// Runs a named pointwise relation suite over the domain. Known names:
///   eq15     basic moves: involutions and distant commutation
///   eq17     which partial-evacuation conjugate of t_1 equals s_i
///   thm15    s_i relations: involution, braid, distance, weight swap
///   eq21-25  mixed s/t/p relations
///   lemma13  P D P' = S
///   thm16a   D-commutation parity, plus a witness search for the odd side
///   thm16b   sigma Coxeter orders (3 / 3 / 6 / 2 by distance)
///   prop17   tau relations and commutation with S
///   thm18    P' tau_k P = sigma_{n-2k}
///   eq111    S s_i S = s_{n-i}
///   eq110    domino-weight transposition bijections
///   rho      weights move by the word's permutation, for a word sample
/// Throws unknown_suite otherwise.
verification_report check_relation_suite(const std::string& name,
                                         const domain_bounds& domain, int threads = 1);

/// The suite names accepted by check_relation_suite, in documentation order.
std::vector<std::string> known_suites();

} // namespace domtab
