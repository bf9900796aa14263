#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "domtab/tableau.hpp"

namespace domtab {

/// Sweep domain: all tableaux whose shape fits in box_rows x box_cols with
/// entries at most n, optionally pinned to one shape and/or one weight vector.
struct domain_bounds {
    int n = 2;
    int box_rows = 3;
    int box_cols = 4;
    std::optional<partition> shape;
    std::optional<std::vector<int>> weight;
};

enum class check_outcome {
    verified,       ///< the property held on every instance
    counterexample, ///< a witness violates it
    not_found,      ///< an existence search exhausted its domain
};

/// A violating instance, with the values both sides produced so the failure
/// replays from the serialized witness.
struct counterexample_info {
    tableau witness;
    std::string lhs;
    std::string rhs;
    std::optional<tableau> lhs_value;
    std::optional<tableau> rhs_value;
    std::string note;
};

struct verification_report {
    std::string suite;
    domain_bounds domain;
    std::uint64_t checked = 0;
    check_outcome outcome = check_outcome::verified;
    std::optional<counterexample_info> witness;
    std::string detail;
    std::chrono::milliseconds elapsed{0};

    bool ok() const noexcept { return outcome == check_outcome::verified; }
};

} // namespace domtab
