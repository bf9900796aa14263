#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domtab {

/// Base class for every failure this library reports.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A chain of partitions is not a valid tableau.
class invalid_chain : public error {
public:
    enum class reason { chain_length, not_nested, not_horizontal_strip };

    invalid_chain(reason r, int level, const std::string& msg)
        : error(msg), reason_(r), level_(level) {}

    reason why() const noexcept { return reason_; }
    /// Chain index i at which nesting or the strip condition fails (0 for length errors).
    int level() const noexcept { return level_; }

private:
    reason reason_;
    int level_;
};

/// A grid filling violates the row/column conditions; carries the offending cell.
class not_semistandard : public error {
public:
    not_semistandard(int row, int col, const std::string& msg)
        : error(msg), row_(row), col_(col) {}

    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    int row_, col_;
};

/// The (lower, middle, upper) triple is not a skew 2-tableau.
class invalid_two_tableau : public error {
public:
    using error::error;
};

/// An operator index does not exist for the ambient entry bound.
class index_out_of_range : public error {
public:
    using error::error;
};

/// Operator-word text that does not match the token grammar.
class word_syntax_error : public error {
public:
    word_syntax_error(std::size_t position, const std::string& msg)
        : error(msg), position_(position) {}

    /// 1-based character offset of the offending token.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A skew 2-tableau that is not a fixed point of the two-row move.
class not_fixed : public error {
public:
    using error::error;
};

/// A tableau that is not fixed by the layer involution; names the moving factor.
class not_domino_fixed : public error {
public:
    not_domino_fixed(int factor, const std::string& msg)
        : error(msg), factor_(factor) {}

    /// Index i of a t_i factor that moves the tableau.
    int factor() const noexcept { return factor_; }

private:
    int factor_;
};

/// A domino covering with an overlap, a gap, or a forbidden horizontal contact.
class invalid_tiling : public error {
public:
    explicit invalid_tiling(const std::string& msg, int placement_index = -1)
        : error(msg), placement_index_(placement_index) {}

    /// Position of the offending placement in the input list, -1 if not tied to one.
    int placement_index() const noexcept { return placement_index_; }

private:
    int placement_index_;
};

/// Verification suite name that the harness does not know.
class unknown_suite : public error {
public:
    using error::error;
};

} // namespace domtab
