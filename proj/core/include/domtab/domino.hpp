#pragma once

#include <span>
#include <vector>

#include "domtab/operators.hpp"
#include "domtab/tableau.hpp"

namespace domtab {

/// Two edge-adjacent cells (horizontal: left,right; vertical: top,bottom) and a
/// positive label. The label carries the layer index, counted from the top:
/// label k belongs to weight coordinate beta'_k.
struct domino_placement {
    cell first;
    cell second;
    int label = 1;

    bool horizontal() const noexcept { return first.row == second.row; }

    friend auto operator<=>(const domino_placement&, const domino_placement&) = default;
};

/// A domino tableau with entries at most (n+1)/2: the even-spaced subchain
/// L_e <= L_{e+2} <= ... <= L_n (e = n mod 2) together with one validated
/// domino covering per layer difference. For even n the chain starts at the
/// empty partition; for odd n it starts at a one-row partition whose cells stay
/// single. Every domino must avoid horizontal contact with other cells of its
/// layer.
class domino_tableau {
public:
    /// chain[j] = L_{e+2j}; tilings[j] covers chain[j+1] \ chain[j].
    /// Validates everything and throws invalid_tiling / domtab::error.
    static domino_tableau from_parts(int n, std::vector<partition> chain,
                                     std::vector<std::vector<domino_placement>> tilings);

    int n() const noexcept { return n_; }
    int epsilon() const noexcept { return n_ % 2; }

    const std::vector<partition>& chain() const noexcept { return chain_; }
    const std::vector<std::vector<domino_placement>>& tilings() const noexcept { return tilings_; }

    const partition& shape() const noexcept { return chain_.back(); }

    /// Weight beta': beta'_k = half the size of the k-th layer from the top;
    /// for odd n the last coordinate counts the single cells of the bottom row.
    std::vector<int> weight() const;

    friend bool operator==(const domino_tableau&, const domino_tableau&) = default;

private:
    domino_tableau(int n, std::vector<partition> chain,
                   std::vector<std::vector<domino_placement>> tilings)
        : n_(n), chain_(std::move(chain)), tilings_(std::move(tilings)) {}

    int n_ = 1;
    std::vector<partition> chain_;
    std::vector<std::vector<domino_placement>> tilings_;
};

/// Whether every factor of D fixes T (equivalently d_operator(T) == T).
bool is_domino_fixed(const tableau& T);

/// The unique covering of upper\lower encoded by a fixed middle partition:
/// paired cells of each free row run become horizontal dominoes, and every
/// covered lower-strip cell tops a vertical domino. Throws not_fixed when the
/// triple is not a fixed point of the two-row move. Placements get the given
/// label.
std::vector<domino_placement> tiling_of_fixed(const partition& lower,
                                              const partition& upper,
                                              const partition& middle,
                                              int label = 1);

/// Inverse direction: recovers the unique fixed middle partition from a
/// covering of the skew shape. Horizontal dominoes contribute one lower-strip
/// and one upper-strip cell to their row's free run (lower cells packed left),
/// vertical dominoes put their top cell in the lower strip. Throws
/// invalid_tiling on overlaps, gaps, or forbidden horizontal contact.
partition two_tableau_of_tiling(const skew_shape& shape,
                                std::span<const domino_placement> tiling);

/// Encodes a D-fixed tableau as a domino tableau (throws not_domino_fixed,
/// naming a moving factor, when the input is not fixed).
domino_tableau domino_from_tableau(const tableau& T);

/// Decodes back to the fixed tableau; mutually inverse with domino_from_tableau.
tableau tableau_from_domino(const domino_tableau& D);

/// The ordinary weight of the fixed tableaux carrying domino weight beta':
/// (b'_m, ..., b'_2, b'_2, b'_1, b'_1), length n, with m = (n+1)/2.
std::vector<int> expanded_domino_weight(std::span<const int> beta_prime, int n);

/// The palindromic weight (b'_1, ..., b'_m, b'_{n/2}, ..., b'_1) of the
/// self-evacuating partners.
std::vector<int> palindromic_weight(std::span<const int> beta_prime, int n);

/// Every admissible domino weight for the given cell count at entry bound n.
std::vector<std::vector<int>> domino_weights(int total_cells, int n);

/// All domino tableaux of the given shape and weight: enumerates the tableaux
/// of the expanded weight, keeps the D-fixed ones, converts.
std::vector<domino_tableau> enumerate_domino(const partition& shape,
                                             std::span<const int> beta_prime, int n);

} // namespace domtab
