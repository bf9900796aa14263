#include "domtab/operators.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

namespace domtab {

namespace {

// ---------------------------------------------------------------------------
// The two-row move on raw part vectors.
//
// Rows of the union strip upper\lower split into three runs: a prefix whose
// cells sit on top of cells of the next row (these always belong to the lower
// strip), a free middle run, and a suffix whose cells hang under the previous
// row (always in the upper strip). Only the middle run moves: if it holds l
// lower-strip cells followed by r upper-strip ones, it ends up with r and l.
// The new middle partition is read off row by row.

using raw_parts = std::vector<int>;

int raw_part(const raw_parts& p, int row) {
    return row >= 1 && row <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(row) - 1]
                                                         : 0;
}

int moved_row(const raw_parts& lower, const raw_parts& middle, const raw_parts& upper,
              int row) {
    int base = raw_part(lower, row);
    int top = raw_part(upper, row);
    if (base == top)
        return raw_part(middle, row); // row empty in the union strip
    int first = std::max(base, raw_part(upper, row + 1)) + 1;
    int last = row > 1 ? std::min(top, raw_part(lower, row - 1)) : top;
    int mid = raw_part(middle, row);
    if (first > last)
        return mid; // nothing free in this row
    int l = mid - (first - 1);
    int r = last - mid;
    assert(l >= 0 && r >= 0);
    return first - 1 + r;
}

void bk_rows_inplace(raw_parts& out, const raw_parts& lower, const raw_parts& middle,
                     const raw_parts& upper) {
    out.clear();
    for (int row = 1; row <= static_cast<int>(upper.size()); ++row)
        out.push_back(moved_row(lower, middle, upper, row));
    while (!out.empty() && out.back() == 0)
        out.pop_back();
}

// ---------------------------------------------------------------------------
// Expansions of the named operators into Bender-Knuth indices, in application
// order (first applied first), cached per entry bound.

struct expansion_table {
    int n;
    std::vector<std::vector<int>> p;     // p[i], 1 <= i <= n-1
    std::vector<std::vector<int>> p_inv; // inverses
    std::vector<std::vector<int>> s;     // s[i], 1 <= i <= n-1
    std::vector<std::vector<int>> s_cap; // S_m, 1 <= m <= n
    std::vector<int> d_word;
    std::vector<int> p_word;
    std::vector<int> p_word_inv;

    explicit expansion_table(int n_) : n(n_) {
        p.resize(static_cast<std::size_t>(n));
        p_inv.resize(static_cast<std::size_t>(n));
        s.resize(static_cast<std::size_t>(n));
        s_cap.resize(static_cast<std::size_t>(n) + 1);
        for (int i = 1; i <= n - 1; ++i) {
            auto& pi = p[static_cast<std::size_t>(i)];
            for (int j = i; j >= 1; --j)
                pi.push_back(j); // p_i = t_1 ... t_i, rightmost first
            auto& qi = p_inv[static_cast<std::size_t>(i)];
            for (int j = 1; j <= i; ++j)
                qi.push_back(j);
        }
        // S_m = p_{m-1} ... p_1 (apply p_1 first); S_1 = identity
        for (int m = 1; m <= n; ++m) {
            auto& w = s_cap[static_cast<std::size_t>(m)];
            for (int j = 1; j <= m - 1; ++j)
                append(w, p[static_cast<std::size_t>(j)]);
        }
        // s_1 = t_1, s_i = p_i s_{i-1} p_i^{-1}
        if (n >= 2)
            s[1] = {1};
        for (int i = 2; i <= n - 1; ++i) {
            auto& w = s[static_cast<std::size_t>(i)];
            append(w, p_inv[static_cast<std::size_t>(i)]);
            append(w, s[static_cast<std::size_t>(i) - 1]);
            append(w, p[static_cast<std::size_t>(i)]);
        }
        // D = t_{n-1} t_{n-3} ..., P = p_{n-1} p_{n-3} ... (rightmost first)
        for (int i = (n % 2 == 0) ? 1 : 2; i <= n - 1; i += 2) {
            d_word.push_back(i);
            append(p_word, p[static_cast<std::size_t>(i)]);
        }
        p_word_inv.assign(p_word.rbegin(), p_word.rend());
    }

    std::vector<int> sigma(int i) const {
        std::vector<int> w{i};
        append(w, s[static_cast<std::size_t>(i) + 1]);
        append(w, s[static_cast<std::size_t>(i) - 1]);
        w.push_back(i);
        return w;
    }

    std::vector<int> tau(int k) const {
        std::vector<int> w = s[static_cast<std::size_t>(n - k)]; // applied first
        append(w, s[static_cast<std::size_t>(k)]);
        return w;
    }

    static void append(std::vector<int>& w, const std::vector<int>& tail) {
        w.insert(w.end(), tail.begin(), tail.end());
    }
};

const expansion_table& table_for(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<expansion_table>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_unique<expansion_table>(n);
    return *slot;
}

void append_factor_expansion(std::vector<int>& out, const op_factor& f, int n) {
    const expansion_table& tab = table_for(n);
    switch (f.kind) {
    case op_kind::t:
        out.push_back(f.index);
        return;
    case op_kind::p:
        expansion_table::append(out, tab.p[static_cast<std::size_t>(f.index)]);
        return;
    case op_kind::p_inv:
        expansion_table::append(out, tab.p_inv[static_cast<std::size_t>(f.index)]);
        return;
    case op_kind::s:
        expansion_table::append(out, tab.s[static_cast<std::size_t>(f.index)]);
        return;
    case op_kind::sigma:
        expansion_table::append(out, tab.sigma(f.index));
        return;
    case op_kind::tau:
        expansion_table::append(out, tab.tau(f.index));
        return;
    case op_kind::S:
        expansion_table::append(out, tab.s_cap[static_cast<std::size_t>(n)]);
        return;
    case op_kind::S_k:
        expansion_table::append(out, tab.s_cap[static_cast<std::size_t>(f.index)]);
        return;
    case op_kind::D:
        expansion_table::append(out, tab.d_word);
        return;
    case op_kind::P:
        expansion_table::append(out, tab.p_word);
        return;
    case op_kind::P_inv:
        expansion_table::append(out, tab.p_word_inv);
        return;
    }
}

void check_factor(const op_factor& f, int n) {
    if (!factor_index_valid(f.kind, f.index, n)) {
        op_factor g = f;
        operator_word w({g});
        throw index_out_of_range("operator " + w.str() + " is out of range for n=" +
                                 std::to_string(n));
    }
}

tableau apply_t_indices(std::span<const int> indices, const tableau& T) {
    // raw row buffers; one scratch vector swaps through the whole walk
    std::vector<raw_parts> rows;
    rows.reserve(T.chain().size());
    for (const partition& level : T.chain())
        rows.push_back(level.parts());
    raw_parts scratch;
    for (int i : indices) {
        bk_rows_inplace(scratch, rows[static_cast<std::size_t>(i) - 1],
                        rows[static_cast<std::size_t>(i)],
                        rows[static_cast<std::size_t>(i) + 1]);
        rows[static_cast<std::size_t>(i)].swap(scratch);
    }
    std::vector<partition> chain;
    chain.reserve(rows.size());
    for (raw_parts& r : rows)
        chain.emplace_back(std::move(r));
    return tableau::from_chain_unchecked(T.n(), std::move(chain));
}

} // namespace

bool factor_index_valid(op_kind kind, int index, int n) noexcept {
    switch (kind) {
    case op_kind::t:
    case op_kind::p:
    case op_kind::p_inv:
    case op_kind::s:
        return index >= 1 && index <= n - 1;
    case op_kind::sigma:
        return n >= 4 && index >= 2 && index <= n - 2;
    case op_kind::tau:
        return index >= 1 && index <= n / 2 - 1;
    case op_kind::S_k:
        return index >= 1 && index <= n;
    case op_kind::S:
    case op_kind::D:
    case op_kind::P:
    case op_kind::P_inv:
        return n >= 1;
    }
    return false;
}

partition bk_skew(const partition& lower, const partition& middle, const partition& upper) {
    if (!is_horizontal_strip(middle, lower) || !is_horizontal_strip(upper, middle))
        throw invalid_two_tableau("triple is not a skew 2-tableau");
    std::vector<int> rows;
    bk_rows_inplace(rows, lower.parts(), middle.parts(), upper.parts());
    return partition(std::move(rows));
}

tableau bender_knuth(const tableau& T, int i) {
    if (i < 1 || i > T.n() - 1)
        throw index_out_of_range("t index " + std::to_string(i) +
                                 " out of range for n=" + std::to_string(T.n()));
    int idx[] = {i};
    return apply_t_indices(idx, T);
}

tableau promotion_inv(const tableau& T, int i) {
    if (i < 1 || i > T.n() - 1)
        throw index_out_of_range("p index " + std::to_string(i) +
                                 " out of range for n=" + std::to_string(T.n()));
    return apply_t_indices(table_for(T.n()).p[static_cast<std::size_t>(i)], T);
}

tableau promotion(const tableau& T, int i) {
    if (i < 1 || i > T.n() - 1)
        throw index_out_of_range("p index " + std::to_string(i) +
                                 " out of range for n=" + std::to_string(T.n()));
    return apply_t_indices(table_for(T.n()).p_inv[static_cast<std::size_t>(i)], T);
}

tableau evacuation(const tableau& T) {
    return apply_t_indices(table_for(T.n()).s_cap[static_cast<std::size_t>(T.n())], T);
}

tableau evacuation_k(const tableau& T, int m) {
    if (m < 1 || m > T.n())
        throw index_out_of_range("S index " + std::to_string(m) +
                                 " out of range for n=" + std::to_string(T.n()));
    return apply_t_indices(table_for(T.n()).s_cap[static_cast<std::size_t>(m)], T);
}

tableau d_operator(const tableau& T) {
    return apply_t_indices(table_for(T.n()).d_word, T);
}

tableau p_operator(const tableau& T) {
    return apply_t_indices(table_for(T.n()).p_word, T);
}

tableau p_operator_inv(const tableau& T) {
    return apply_t_indices(table_for(T.n()).p_word_inv, T);
}

// ---------------------------------------------------------------------------
// Word parsing and printing.

namespace {

struct token_spec {
    const char* prefix;
    op_kind kind;
    bool takes_index;
    bool allows_prime;
};

// longest prefixes first so "sigma" wins over "s" and "tau" over "t"
constexpr token_spec token_specs[] = {
    {"sigma", op_kind::sigma, true, false},
    {"tau", op_kind::tau, true, false},
    {"t", op_kind::t, true, false},
    {"p", op_kind::p, true, true},
    {"s", op_kind::s, true, false},
    {"S", op_kind::S, false, false},
    {"D", op_kind::D, false, false},
    {"P", op_kind::P, false, false},
};

op_factor parse_token(std::string_view tok, std::size_t pos, int n) {
    for (const token_spec& spec : token_specs) {
        std::string_view prefix(spec.prefix);
        if (!tok.starts_with(prefix))
            continue;
        std::string_view rest = tok.substr(prefix.size());
        bool primed = rest.ends_with('\'');
        if (primed)
            rest.remove_suffix(1);

        if (rest.empty()) {
            // bare S / D / P (optionally P')
            if (spec.takes_index)
                continue; // "t" alone is not a token; maybe another spec matches
            if (primed && prefix != "P")
                throw word_syntax_error(pos, "token '" + std::string(tok) +
                                                 "' cannot be inverted");
            op_factor f{primed ? op_kind::P_inv : spec.kind, 0};
            check_factor(f, n);
            return f;
        }

        int index = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
        if (ec != std::errc() || ptr != rest.data() + rest.size())
            continue; // suffix is not a number; try a shorter prefix
        if (!spec.takes_index && spec.kind != op_kind::S)
            throw word_syntax_error(pos, "token '" + std::string(tok) +
                                             "' does not take an index");
        if (primed && !spec.allows_prime)
            throw word_syntax_error(pos, "token '" + std::string(tok) +
                                             "' cannot be inverted");
        op_kind kind = spec.kind;
        if (kind == op_kind::S)
            kind = op_kind::S_k;
        else if (kind == op_kind::p && primed)
            kind = op_kind::p_inv;
        op_factor f{kind, index};
        check_factor(f, n);
        return f;
    }
    throw word_syntax_error(pos, "unrecognized token '" + std::string(tok) +
                                     "' at position " + std::to_string(pos));
}

} // namespace

operator_word operator_word::parse(std::string_view text, int n) {
    std::vector<op_factor> factors;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        factors.push_back(parse_token(text.substr(start, i - start), start + 1, n));
    }
    return operator_word(std::move(factors));
}

std::string operator_word::str() const {
    std::string out;
    for (const op_factor& f : factors_) {
        if (!out.empty())
            out += ' ';
        switch (f.kind) {
        case op_kind::t: out += 't' + std::to_string(f.index); break;
        case op_kind::p: out += 'p' + std::to_string(f.index); break;
        case op_kind::p_inv: out += 'p' + std::to_string(f.index) + '\''; break;
        case op_kind::s: out += 's' + std::to_string(f.index); break;
        case op_kind::sigma: out += "sigma" + std::to_string(f.index); break;
        case op_kind::tau: out += "tau" + std::to_string(f.index); break;
        case op_kind::S: out += 'S'; break;
        case op_kind::S_k: out += 'S' + std::to_string(f.index); break;
        case op_kind::D: out += 'D'; break;
        case op_kind::P: out += 'P'; break;
        case op_kind::P_inv: out += "P'"; break;
        }
    }
    return out;
}

std::vector<int> expand_to_t_indices(const operator_word& word, int n) {
    std::vector<int> out;
    const auto& factors = word.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) { // rightmost first
        check_factor(*it, n);
        append_factor_expansion(out, *it, n);
    }
    return out;
}

tableau apply_t_word(std::span<const int> indices, const tableau& T) {
    return apply_t_indices(indices, T);
}

tableau apply_word(const operator_word& word, const tableau& T) {
    std::vector<int> indices = expand_to_t_indices(word, T.n());
    return apply_t_indices(indices, T);
}

std::vector<int> weight_permutation(const operator_word& word, int n) {
    // track which source coordinate ends up at each position, then invert
    std::vector<int> source(static_cast<std::size_t>(n));
    std::iota(source.begin(), source.end(), 0);
    for (int j : expand_to_t_indices(word, n))
        std::swap(source[static_cast<std::size_t>(j) - 1], source[static_cast<std::size_t>(j)]);
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        image[static_cast<std::size_t>(source[static_cast<std::size_t>(k)])] = k;
    return image;
}

} // namespace domtab
