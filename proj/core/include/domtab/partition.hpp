#pragma once

#include <compare>
#include <vector>

#include "domtab/errors.hpp"

namespace domtab {

/// An integer partition: weakly decreasing positive parts, trailing zeros trimmed.
/// Equality is structural; the empty partition has no parts.
class partition {
public:
    partition() = default;

    /// Normalizes trailing zeros away; throws domtab::error if parts increase
    /// or go negative.
    explicit partition(std::vector<int> parts);

    /// 1-based row length; 0 past the last row.
    int part(int row) const noexcept {
        return row >= 1 && row <= static_cast<int>(parts_.size()) ? parts_[row - 1] : 0;
    }

    int rows() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// Number of cells |lambda|.
    int cells() const noexcept;

    const std::vector<int>& parts() const noexcept { return parts_; }

    auto operator<=>(const partition&) const = default;

private:
    std::vector<int> parts_;
};

/// 1-based box coordinates in a Young diagram.
struct cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const cell&, const cell&) = default;
};

/// Rowwise containment: inner fits inside outer.
bool contains(const partition& inner, const partition& outer) noexcept;

/// inner contained in outer with at most one cell of outer\inner per column.
bool is_horizontal_strip(const partition& outer, const partition& inner) noexcept;

/// A skew diagram outer\inner. Construction checks containment.
struct skew_shape {
    partition outer;
    partition inner;

    skew_shape(partition outer_, partition inner_);

    int cells() const noexcept { return outer.cells() - inner.cells(); }
};

/// Cells of the skew diagram in row-major order.
std::vector<cell> skew_cells(const skew_shape& shape);

/// A contiguous run of columns [first, last] in one row; empty when first > last.
struct col_range {
    int first = 1;
    int last = 0;

    bool empty() const noexcept { return first > last; }
    int length() const noexcept { return empty() ? 0 : last - first + 1; }

    friend bool operator==(const col_range&, const col_range&) = default;
};

/// The maximal run of cells in the given row of the skew shape with no cell of
/// the shape directly above or below. Cells covered from below form a prefix of
/// the row and cells covered from above a suffix, so the free cells are always
/// one contiguous (possibly empty) interval.
col_range free_row_segment(const skew_shape& shape, int row);

/// Every partition with at most max_rows parts, each at most max_cols, ordered
/// by cell count and then by lexicographically decreasing parts. The stream has
/// exactly binomial(max_rows + max_cols, max_rows) elements.
std::vector<partition> partitions_in_box(int max_rows, int max_cols);

} // namespace domtab
