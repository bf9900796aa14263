#pragma once

#include <functional>
#include <span>
#include <vector>

#include "domtab/partition.hpp"

namespace domtab {

/// A semistandard tableau with entries bounded by n, stored as its chain of
/// partitions empty = L_0 <= L_1 <= ... <= L_n where every difference
/// L_i \ L_{i-1} is a horizontal strip (repeats allowed). The familiar grid
/// filling, with the cells of L_i \ L_{i-1} holding entry i, is a derived view.
class tableau {
public:
    /// Validates the chain; throws invalid_chain on a length, nesting or strip
    /// violation (reporting the failing level).
    static tableau from_chain(int n, std::vector<partition> chain);

    /// Builds the chain from a grid filling. Rows must weakly increase, columns
    /// strictly increase, row lengths weakly decrease, entries lie in 1..n;
    /// otherwise throws not_semistandard with the offending cell.
    static tableau from_grid(const std::vector<std::vector<int>>& grid, int n);

    /// Trusted constructor for operator code that produces valid chains by
    /// construction. Still normalizes nothing: the chain must be exact.
    static tableau from_chain_unchecked(int n, std::vector<partition> chain);

    int n() const noexcept { return n_; }
    const std::vector<partition>& chain() const noexcept { return chain_; }
    /// L_i for 0 <= i <= n.
    const partition& level(int i) const { return chain_.at(static_cast<std::size_t>(i)); }

    const partition& shape() const noexcept { return chain_.back(); }
    /// Strip sizes |L_i \ L_{i-1}|, always length n (trailing zeros kept).
    std::vector<int> weight() const;

    std::vector<std::vector<int>> to_grid() const;

    bool operator==(const tableau&) const = default;
    auto operator<=>(const tableau&) const = default;

private:
    tableau(int n, std::vector<partition> chain)
        : n_(n), chain_(std::move(chain)) {}

    int n_ = 1;
    std::vector<partition> chain_;
};

/// All tableaux of the given shape with entries at most n, in lexicographic
/// chain order (empty stream when the shape has more than n rows).
std::vector<tableau> enumerate_tableaux(const partition& shape, int n);

/// The tableaux of the given shape and exact weight beta (length = entry bound).
std::vector<tableau> enumerate_tableaux_weight(const partition& shape,
                                               std::span<const int> beta);

/// Visitor forms of the two enumerations; the visitor returns false to stop.
void for_each_tableau(const partition& shape, int n,
                      const std::function<bool(const tableau&)>& visit);
void for_each_tableau_weight(const partition& shape, std::span<const int> beta,
                             const std::function<bool(const tableau&)>& visit);

/// All vectors of n nonnegative integers summing to total, lexicographically.
std::vector<std::vector<int>> weight_compositions(int total, int n);

} // namespace domtab
