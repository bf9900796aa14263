#include "domtab/domino.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace domtab {

namespace {

std::string cell_str(const cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

bool adjacent(const cell& a, const cell& b) {
    int dr = b.row - a.row, dc = b.col - a.col;
    return (dr == 0 && dc == 1) || (dr == 1 && dc == 0);
}

bool in_skew(const skew_shape& shape, int row, int col) {
    return row >= 1 && col > shape.inner.part(row) && col <= shape.outer.part(row);
}

// condition on a covering: no cell of the layer directly above or below a
// domino, other than the domino's own second cell
bool horizontal_contact_free(const skew_shape& shape, const domino_placement& d) {
    auto clear_above = [&](const cell& c) { return !in_skew(shape, c.row - 1, c.col); };
    auto clear_below = [&](const cell& c) { return !in_skew(shape, c.row + 1, c.col); };
    if (d.horizontal())
        return clear_above(d.first) && clear_above(d.second) &&
               clear_below(d.first) && clear_below(d.second);
    return clear_above(d.first) && clear_below(d.second);
}

} // namespace

bool is_domino_fixed(const tableau& T) {
    const auto& chain = T.chain();
    for (int i = T.n() - 1; i >= 1; i -= 2) {
        partition moved = bk_skew(chain[static_cast<std::size_t>(i) - 1],
                                  chain[static_cast<std::size_t>(i)],
                                  chain[static_cast<std::size_t>(i) + 1]);
        if (moved != chain[static_cast<std::size_t>(i)])
            return false;
    }
    return true;
}

std::vector<domino_placement> tiling_of_fixed(const partition& lower,
                                              const partition& upper,
                                              const partition& middle, int label) {
    if (bk_skew(lower, middle, upper) != middle)
        throw not_fixed("middle partition is not fixed by the two-row move");
    std::vector<domino_placement> out;
    skew_shape layer(upper, lower);
    for (int row = 1; row <= upper.rows(); ++row) {
        // free run: equal counts from each strip, paired into horizontal dominoes
        col_range seg = free_row_segment(layer, row);
        for (int c = seg.first; c + 1 <= seg.last; c += 2)
            out.push_back({{row, c}, {row, c + 1}, label});
        // covered cells of the lower strip top vertical dominoes
        int covered_last = std::min(middle.part(row), upper.part(row + 1));
        for (int c = lower.part(row) + 1; c <= covered_last; ++c)
            out.push_back({{row, c}, {row + 1, c}, label});
    }
    return out;
}

partition two_tableau_of_tiling(const skew_shape& shape,
                                std::span<const domino_placement> tiling) {
    std::map<cell, int> owner; // cell -> placement index
    for (std::size_t idx = 0; idx < tiling.size(); ++idx) {
        const domino_placement& d = tiling[idx];
        if (!adjacent(d.first, d.second))
            throw invalid_tiling("placement cells " + cell_str(d.first) + "," +
                                     cell_str(d.second) + " are not adjacent",
                                 static_cast<int>(idx));
        for (const cell& c : {d.first, d.second}) {
            if (!in_skew(shape, c.row, c.col))
                throw invalid_tiling("cell " + cell_str(c) + " lies outside the shape",
                                     static_cast<int>(idx));
            if (!owner.emplace(c, static_cast<int>(idx)).second)
                throw invalid_tiling("cell " + cell_str(c) + " covered twice",
                                     static_cast<int>(idx));
        }
        if (!horizontal_contact_free(shape, d))
            throw invalid_tiling("domino at " + cell_str(d.first) +
                                     " shares a horizontal edge with the layer",
                                 static_cast<int>(idx));
    }
    if (2 * tiling.size() != static_cast<std::size_t>(shape.cells()))
        throw invalid_tiling("covering leaves a gap: " + std::to_string(tiling.size()) +
                             " dominoes for " + std::to_string(shape.cells()) + " cells");

    // middle = inner + lower-strip cells: per row, the horizontal dominoes put
    // their lower-strip halves at the left of the free run, and vertical tops
    // extend the covered prefix
    std::vector<int> rows;
    for (int row = 1; row <= shape.outer.rows(); ++row) {
        col_range seg = free_row_segment(shape, row);
        int horizontals = 0;
        int prefix_end = shape.inner.part(row); // end of the covered-from-below prefix
        for (const domino_placement& d : tiling) {
            if (d.horizontal() && d.first.row == row)
                ++horizontals;
            if (!d.horizontal() && d.first.row == row)
                prefix_end = std::max(prefix_end, d.first.col);
        }
        rows.push_back(seg.empty() ? std::max(prefix_end, shape.inner.part(row))
                                   : seg.first - 1 + horizontals);
        if (!seg.empty() && prefix_end >= seg.first)
            throw invalid_tiling("vertical domino intrudes into the free run of row " +
                                 std::to_string(row));
    }
    while (!rows.empty() && rows.back() == 0)
        rows.pop_back();
    partition middle(std::move(rows));

    if (!is_horizontal_strip(middle, shape.inner) ||
        !is_horizontal_strip(shape.outer, middle))
        throw invalid_tiling("covering does not yield a skew 2-tableau");
    if (bk_skew(shape.inner, middle, shape.outer) != middle)
        throw invalid_tiling("covering does not yield a fixed middle partition");
    return middle;
}

domino_tableau domino_tableau::from_parts(int n, std::vector<partition> chain,
                                          std::vector<std::vector<domino_placement>> tilings) {
    if (n < 1)
        throw error("entry bound must be positive");
    int eps = n % 2;
    std::size_t levels = static_cast<std::size_t>((n - eps) / 2) + 1;
    if (chain.size() != levels)
        throw error("domino chain must have " + std::to_string(levels) +
                    " partitions, got " + std::to_string(chain.size()));
    if (tilings.size() + 1 != chain.size())
        throw error("need one tiling per layer difference");
    if (eps == 0) {
        if (!chain.front().empty())
            throw error("even entry bound requires an empty base partition");
    } else if (chain.front().rows() > 1) {
        throw error("odd entry bound requires a one-row base partition");
    }
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        skew_shape layer(chain[j + 1], chain[j]); // checks containment
        two_tableau_of_tiling(layer, tilings[j]); // checks cover + contact rule
        for (const domino_placement& d : tilings[j])
            if (d.label < 1)
                throw invalid_tiling("placement label must be positive");
    }
    return domino_tableau(n, std::move(chain), std::move(tilings));
}

std::vector<int> domino_tableau::weight() const {
    int m = (n_ + 1) / 2;
    std::vector<int> beta_prime(static_cast<std::size_t>(m), 0);
    for (std::size_t j = 0; j + 1 < chain_.size(); ++j) {
        int k = static_cast<int>(chain_.size() - 1 - j); // layer index from the top
        beta_prime[static_cast<std::size_t>(k) - 1] =
            (chain_[j + 1].cells() - chain_[j].cells()) / 2;
    }
    if (n_ % 2 == 1)
        beta_prime[static_cast<std::size_t>(m) - 1] = chain_.front().cells();
    return beta_prime;
}

domino_tableau domino_from_tableau(const tableau& T) {
    const auto& chain = T.chain();
    int n = T.n();
    for (int i = n - 1; i >= 1; i -= 2) {
        partition moved = bk_skew(chain[static_cast<std::size_t>(i) - 1],
                                  chain[static_cast<std::size_t>(i)],
                                  chain[static_cast<std::size_t>(i) + 1]);
        if (moved != chain[static_cast<std::size_t>(i)])
            throw not_domino_fixed(i, "tableau is moved by t" + std::to_string(i));
    }
    int eps = n % 2;
    std::vector<partition> sub;
    for (int i = eps; i <= n; i += 2)
        sub.push_back(chain[static_cast<std::size_t>(i)]);
    std::vector<std::vector<domino_placement>> tilings;
    for (int i = eps + 1; i <= n - 1; i += 2) {
        int label = (n - i + 1) / 2; // layer index from the top
        tilings.push_back(tiling_of_fixed(chain[static_cast<std::size_t>(i) - 1],
                                          chain[static_cast<std::size_t>(i) + 1],
                                          chain[static_cast<std::size_t>(i)], label));
    }
    return domino_tableau::from_parts(n, std::move(sub), std::move(tilings));
}

tableau tableau_from_domino(const domino_tableau& D) {
    int n = D.n();
    int eps = D.epsilon();
    std::vector<partition> chain(static_cast<std::size_t>(n) + 1);
    for (int i = eps, j = 0; i <= n; i += 2, ++j)
        chain[static_cast<std::size_t>(i)] = D.chain()[static_cast<std::size_t>(j)];
    if (eps == 1)
        chain[0] = partition(); // the bottom strip sits above the empty diagram
    for (int i = eps + 1, j = 0; i <= n - 1; i += 2, ++j) {
        skew_shape layer(chain[static_cast<std::size_t>(i) + 1],
                         chain[static_cast<std::size_t>(i) - 1]);
        chain[static_cast<std::size_t>(i)] =
            two_tableau_of_tiling(layer, D.tilings()[static_cast<std::size_t>(j)]);
    }
    return tableau::from_chain(n, std::move(chain));
}

std::vector<int> expanded_domino_weight(std::span<const int> beta_prime, int n) {
    int m = (n + 1) / 2;
    if (static_cast<int>(beta_prime.size()) != m)
        throw error("domino weight must have " + std::to_string(m) + " coordinates");
    std::vector<int> beta;
    beta.reserve(static_cast<std::size_t>(n));
    if (n % 2 == 1)
        beta.push_back(beta_prime[static_cast<std::size_t>(m) - 1]);
    for (int k = n / 2; k >= 1; --k) {
        beta.push_back(beta_prime[static_cast<std::size_t>(k) - 1]);
        beta.push_back(beta_prime[static_cast<std::size_t>(k) - 1]);
    }
    return beta;
}

std::vector<int> palindromic_weight(std::span<const int> beta_prime, int n) {
    int m = (n + 1) / 2;
    if (static_cast<int>(beta_prime.size()) != m)
        throw error("domino weight must have " + std::to_string(m) + " coordinates");
    std::vector<int> beta(beta_prime.begin(), beta_prime.end());
    for (int k = n / 2; k >= 1; --k)
        beta.push_back(beta_prime[static_cast<std::size_t>(k) - 1]);
    return beta;
}

std::vector<std::vector<int>> domino_weights(int total_cells, int n) {
    int m = (n + 1) / 2;
    std::vector<std::vector<int>> out;
    if (n % 2 == 0) {
        if (total_cells % 2 != 0)
            return out;
        for (auto& w : weight_compositions(total_cells / 2, m))
            out.push_back(std::move(w));
        return out;
    }
    // odd n: paired coordinates count twice, the last absorbs the leftover
    for (int paired = 0; 2 * paired <= total_cells; ++paired) {
        for (auto& w : weight_compositions(paired, m - 1)) {
            w.push_back(total_cells - 2 * paired);
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<domino_tableau> enumerate_domino(const partition& shape,
                                             std::span<const int> beta_prime, int n) {
    std::vector<domino_tableau> out;
    std::vector<int> beta = expanded_domino_weight(beta_prime, n);
    for_each_tableau_weight(shape, beta, [&](const tableau& T) {
        if (is_domino_fixed(T))
            out.push_back(domino_from_tableau(T));
        return true;
    });
    return out;
}

} // namespace domtab
