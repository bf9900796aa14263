#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domtab/tableau.hpp"

namespace domtab {

/// The two-row move: given a skew 2-tableau (lower <= middle <= upper), swap in
/// every free row run the number of cells belonging to the lower strip with the
/// number belonging to the upper one, and return the new middle partition.
/// The move is an involution. Throws invalid_two_tableau if either difference
/// is not a horizontal strip.
partition bk_skew(const partition& lower, const partition& middle, const partition& upper);

/// Bender-Knuth involution t_i, 1 <= i <= n-1: applies the two-row move to
/// (L_{i-1}, L_i, L_{i+1}). Swaps weight coordinates i and i+1.
tableau bender_knuth(const tableau& T, int i);

/// p_i = t_1 t_2 ... t_i (rightmost factor first), the inverse promotion.
tableau promotion_inv(const tableau& T, int i);
/// The inverse of p_i, i.e. t_i ... t_2 t_1.
tableau promotion(const tableau& T, int i);

/// Evacuation S = S_n = p_{n-1} p_{n-2} ... p_1, an involution on tableaux.
tableau evacuation(const tableau& T);
/// Partial evacuation S_m = p_{m-1} ... p_1 for 1 <= m <= n; S_1 = identity.
tableau evacuation_k(const tableau& T, int m);

/// D = t_{n-1} t_{n-3} ... (down to t_2 for odd n, t_1 for even n). Its factors
/// commute and touch disjoint chain levels, so D is an involution and fixes T
/// exactly when every factor does.
tableau d_operator(const tableau& T);

/// P = p_{n-1} p_{n-3} ... (down to p_2 for odd n, p_1 for even n), and its
/// inverse. P conjugates D to S and carries layer-fixed tableaux onto
/// self-evacuating ones.
tableau p_operator(const tableau& T);
tableau p_operator_inv(const tableau& T);

/// Generator tokens of the operator-word grammar.
enum class op_kind : std::uint8_t {
    t,      ///< t3   Bender-Knuth involution
    p,      ///< p2   inverse promotion p_i
    p_inv,  ///< p2'  promotion (inverse of p_i)
    s,      ///< s1   symmetric-group involution s_i
    sigma,  ///< sigma4
    tau,    ///< tau2
    S,      ///< S    evacuation
    S_k,    ///< S3   partial evacuation S_m
    D,      ///< D
    P,      ///< P
    P_inv,  ///< P'
};

struct op_factor {
    op_kind kind = op_kind::t;
    int index = 0; // unused for S, D, P, P'

    friend bool operator==(const op_factor&, const op_factor&) = default;
};

/// A product of generators, leftmost factor outermost (applied last), matching
/// the usual product notation. Parsing validates every index against the entry
/// bound n it is given; words render back to the same token text.
class operator_word {
public:
    operator_word() = default;
    explicit operator_word(std::vector<op_factor> factors)
        : factors_(std::move(factors)) {}

    /// Whitespace-separated tokens: t3 p2 p2' s1 sigma4 tau2 S S3 D P P'.
    /// Throws word_syntax_error (with 1-based character position) on malformed
    /// tokens and index_out_of_range on indices invalid for n.
    static operator_word parse(std::string_view text, int n);

    std::string str() const;

    const std::vector<op_factor>& factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }

    friend bool operator==(const operator_word&, const operator_word&) = default;

private:
    std::vector<op_factor> factors_;
};

/// Applies the word right-to-left; the empty word is the identity.
/// Throws index_out_of_range when a factor index is invalid for T's bound.
tableau apply_word(const operator_word& word, const tableau& T);

/// Expansion of the word into Bender-Knuth indices in application order (first
/// applied first). Named operators are expanded through cached tables per n.
std::vector<int> expand_to_t_indices(const operator_word& word, int n);

/// Applies a pre-expanded index sequence (application order). Sweeps expand a
/// word once and reuse it through this entry point.
tableau apply_t_word(std::span<const int> indices, const tableau& T);

/// The permutation by which the word moves weight coordinates: result[i] is the
/// 0-based image of coordinate i, so that
/// weight(apply_word(w, T))[result[i]] == weight(T)[i].
std::vector<int> weight_permutation(const operator_word& word, int n);

/// Valid index ranges for each generator at entry bound n; used by the parser
/// and by apply-time revalidation.
bool factor_index_valid(op_kind kind, int index, int n) noexcept;

} // namespace domtab
