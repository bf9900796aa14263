#include "domtab/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace domtab {

namespace {

void validate_chain(int n, const std::vector<partition>& chain) {
    if (n < 1)
        throw invalid_chain(invalid_chain::reason::chain_length, 0,
                            "entry bound must be positive");
    if (chain.size() != static_cast<std::size_t>(n) + 1)
        throw invalid_chain(invalid_chain::reason::chain_length, 0,
                            "chain must have n+1 partitions, got " +
                                std::to_string(chain.size()));
    if (!chain.front().empty())
        throw invalid_chain(invalid_chain::reason::not_nested, 0,
                            "chain must start at the empty partition");
    for (int i = 1; i <= n; ++i) {
        const auto& prev = chain[static_cast<std::size_t>(i) - 1];
        const auto& cur = chain[static_cast<std::size_t>(i)];
        if (!contains(prev, cur))
            throw invalid_chain(invalid_chain::reason::not_nested, i,
                                "chain not nested at level " + std::to_string(i));
        if (!is_horizontal_strip(cur, prev))
            throw invalid_chain(invalid_chain::reason::not_horizontal_strip, i,
                                "difference at level " + std::to_string(i) +
                                    " is not a horizontal strip");
    }
}

} // namespace

tableau tableau::from_chain(int n, std::vector<partition> chain) {
    validate_chain(n, chain);
    return tableau(n, std::move(chain));
}

tableau tableau::from_chain_unchecked(int n, std::vector<partition> chain) {
    return tableau(n, std::move(chain));
}

tableau tableau::from_grid(const std::vector<std::vector<int>>& grid, int n) {
    if (n < 1)
        throw not_semistandard(0, 0, "entry bound must be positive");
    for (std::size_t r = 0; r < grid.size(); ++r) {
        const auto& row = grid[r];
        if (row.empty())
            throw not_semistandard(static_cast<int>(r) + 1, 0, "empty grid row");
        if (r + 1 < grid.size() && grid[r + 1].size() > row.size())
            throw not_semistandard(static_cast<int>(r) + 2, 0,
                                   "row lengths must weakly decrease");
        for (std::size_t c = 0; c < row.size(); ++c) {
            int v = row[c];
            int rr = static_cast<int>(r) + 1, cc = static_cast<int>(c) + 1;
            if (v < 1 || v > n)
                throw not_semistandard(rr, cc, "entry out of range 1..n at (" +
                                                   std::to_string(rr) + "," +
                                                   std::to_string(cc) + ")");
            if (c > 0 && row[c - 1] > v)
                throw not_semistandard(rr, cc, "row not weakly increasing at (" +
                                                   std::to_string(rr) + "," +
                                                   std::to_string(cc) + ")");
            if (r > 0 && c < grid[r - 1].size() && grid[r - 1][c] >= v)
                throw not_semistandard(rr, cc, "column not strictly increasing at (" +
                                                   std::to_string(rr) + "," +
                                                   std::to_string(cc) + ")");
        }
    }
    std::vector<partition> chain;
    chain.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<int> parts;
        for (const auto& row : grid) {
            int len = 0;
            while (len < static_cast<int>(row.size()) && row[static_cast<std::size_t>(len)] <= k)
                ++len;
            if (len == 0)
                break;
            parts.push_back(len);
        }
        chain.emplace_back(std::move(parts));
    }
    // semistandardness already guarantees chain validity; keep the cheap check
    validate_chain(n, chain);
    return tableau(n, std::move(chain));
}

std::vector<int> tableau::weight() const {
    std::vector<int> beta(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i)
        beta[static_cast<std::size_t>(i) - 1] =
            chain_[static_cast<std::size_t>(i)].cells() -
            chain_[static_cast<std::size_t>(i) - 1].cells();
    return beta;
}

std::vector<std::vector<int>> tableau::to_grid() const {
    const partition& outer = shape();
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(outer.rows()));
    for (int r = 1; r <= outer.rows(); ++r)
        grid[static_cast<std::size_t>(r) - 1].resize(static_cast<std::size_t>(outer.part(r)));
    for (int i = 1; i <= n_; ++i) {
        const partition& prev = chain_[static_cast<std::size_t>(i) - 1];
        const partition& cur = chain_[static_cast<std::size_t>(i)];
        for (int r = 1; r <= cur.rows(); ++r)
            for (int c = prev.part(r) + 1; c <= cur.part(r); ++c)
                grid[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = i;
    }
    return grid;
}

namespace {

// Candidates for the next chain level: all mu with prev <= mu <= cap, mu\prev a
// horizontal strip, and cap\mu coverable by the remaining number of strips
// (cap[k + remaining] <= mu[k] for all k). Emitted in ascending lexicographic
// order of the part vectors, which keeps whole chains lexicographically sorted.
// want_size < 0 means any size.
template <typename Fn>
void next_levels(const partition& prev, const partition& cap, int remaining,
                 int want_size, Fn&& emit) {
    int max_rows = cap.rows();
    std::vector<int> parts(static_cast<std::size_t>(max_rows), 0);

    auto rec = [&](auto&& self, int row, int placed) -> void {
        if (row > max_rows) {
            if (want_size >= 0 && placed != want_size)
                return;
            std::vector<int> trimmed(parts.begin(), parts.begin() + max_rows);
            emit(partition(std::move(trimmed)));
            return;
        }
        int lo = std::max(prev.part(row), cap.part(row + remaining));
        int hi = std::min(cap.part(row), row > 1 ? prev.part(row - 1) : cap.part(row));
        if (row > 1)
            hi = std::min(hi, parts[static_cast<std::size_t>(row) - 2]);
        if (lo > hi)
            return; // no admissible length for this row
        for (int v = lo; v <= hi; ++v) {
            if (want_size >= 0) {
                int added = placed + (v - prev.part(row));
                if (added > want_size)
                    break;
            }
            parts[static_cast<std::size_t>(row) - 1] = v;
            self(self, row + 1, placed + (v - prev.part(row)));
        }
        parts[static_cast<std::size_t>(row) - 1] = 0;
    };
    rec(rec, 1, 0);
}

bool walk_chains(const partition& shape, int n, std::span<const int> beta,
                 const std::function<bool(const tableau&)>& visit) {
    if (shape.rows() > n)
        return true; // no tableau can reach a shape with more rows than entries
    std::vector<partition> chain;
    chain.reserve(static_cast<std::size_t>(n) + 1);
    chain.emplace_back();

    bool keep_going = true;
    auto rec = [&](auto&& self, int level) -> void {
        if (!keep_going)
            return;
        if (level > n) {
            keep_going = visit(tableau::from_chain_unchecked(n, chain));
            return;
        }
        int want = beta.empty() ? -1 : beta[static_cast<std::size_t>(level) - 1];
        next_levels(chain.back(), shape, n - level, want, [&](partition mu) {
            if (!keep_going)
                return;
            chain.push_back(std::move(mu));
            self(self, level + 1);
            chain.pop_back();
        });
    };
    rec(rec, 1);
    return keep_going;
}

} // namespace

void for_each_tableau(const partition& shape, int n,
                      const std::function<bool(const tableau&)>& visit) {
    if (n < 1)
        throw error("entry bound must be positive");
    walk_chains(shape, n, {}, visit);
}

void for_each_tableau_weight(const partition& shape, std::span<const int> beta,
                             const std::function<bool(const tableau&)>& visit) {
    int n = static_cast<int>(beta.size());
    if (n < 1)
        throw error("weight vector must have positive length");
    int total = std::accumulate(beta.begin(), beta.end(), 0);
    if (total != shape.cells())
        return; // weight cannot fill the shape
    walk_chains(shape, n, beta, visit);
}

std::vector<tableau> enumerate_tableaux(const partition& shape, int n) {
    std::vector<tableau> out;
    for_each_tableau(shape, n, [&](const tableau& T) {
        out.push_back(T);
        return true;
    });
    return out;
}

std::vector<tableau> enumerate_tableaux_weight(const partition& shape,
                                               std::span<const int> beta) {
    std::vector<tableau> out;
    for_each_tableau_weight(shape, beta, [&](const tableau& T) {
        out.push_back(T);
        return true;
    });
    return out;
}

std::vector<std::vector<int>> weight_compositions(int total, int n) {
    std::vector<std::vector<int>> out;
    if (n <= 0) {
        if (total == 0)
            out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

} // namespace domtab
