#include "domtab/partition.hpp"

#include <algorithm>
#include <numeric>

namespace domtab {

partition::partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0)
            throw error("partition part is negative");
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
            throw error("partition parts must weakly decrease");
    }
}

int partition::cells() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool contains(const partition& inner, const partition& outer) noexcept {
    for (int k = 1; k <= inner.rows(); ++k)
        if (inner.part(k) > outer.part(k))
            return false;
    return true;
}

bool is_horizontal_strip(const partition& outer, const partition& inner) noexcept {
    if (!contains(inner, outer))
        return false;
    // at most one cell per column: row k+1 of outer may not pass row k of inner
    for (int k = 1; k <= outer.rows(); ++k)
        if (outer.part(k + 1) > inner.part(k))
            return false;
    return true;
}

skew_shape::skew_shape(partition outer_, partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!contains(inner, outer))
        throw error("skew shape: inner partition not contained in outer");
}

std::vector<cell> skew_cells(const skew_shape& shape) {
    std::vector<cell> out;
    out.reserve(static_cast<std::size_t>(shape.cells()));
    for (int k = 1; k <= shape.outer.rows(); ++k)
        for (int j = shape.inner.part(k) + 1; j <= shape.outer.part(k); ++j)
            out.push_back({k, j});
    return out;
}

col_range free_row_segment(const skew_shape& shape, int row) {
    const partition& outer = shape.outer;
    const partition& inner = shape.inner;
    if (row < 1 || row > outer.rows())
        return {};
    // Within row k, everything at or left of outer[k+1] has a cell of the shape
    // below it, and everything right of inner[k-1] has one above it.
    int first = std::max(inner.part(row), outer.part(row + 1)) + 1;
    int last = outer.part(row);
    if (row > 1)
        last = std::min(last, inner.part(row - 1));
    if (first > last)
        return {};
    return {first, last};
}

std::vector<partition> partitions_in_box(int max_rows, int max_cols) {
    if (max_rows < 0 || max_cols < 0)
        throw error("partitions_in_box: negative box");
    std::vector<partition> out;
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int row, int bound) -> void {
        out.emplace_back(std::vector<int>(parts));
        if (row > max_rows)
            return;
        for (int v = 1; v <= bound; ++v) {
            parts.push_back(v);
            self(self, row + 1, v);
            parts.pop_back();
        }
    };
    recurse(recurse, 1, max_cols);
    std::sort(out.begin(), out.end(), [](const partition& a, const partition& b) {
        if (a.cells() != b.cells())
            return a.cells() < b.cells();
        return b.parts() < a.parts(); // larger first part earlier within a grade
    });
    return out;
}

} // namespace domtab
