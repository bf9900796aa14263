#pragma once

#include <string>
#include <string_view>

#include "domtab/domino.hpp"
#include "domtab/report.hpp"
#include "domtab/tableau.hpp"

namespace domtab {

// JSON formats:
//   partition       [3,1]                       (empty partition: [])
//   tableau         {"n": 2, "chain": [[],[2],[3,1]]}
//                   input also accepts {"n": 2, "grid": [[1,1,2],[2]]}
//   domino tableau  {"n": 2, "chain": [[],[2,2]],
//                    "tilings": [[{"cells": [[1,1],[2,1]], "label": 1}, ...]]}
// Serialization is canonical (chain form, no insignificant whitespace).

std::string to_json_string(const partition& p);
std::string to_json_string(const tableau& T);
std::string to_json_string(const domino_tableau& D);
std::string to_json_string(const verification_report& report);

partition partition_from_json(std::string_view text);
tableau tableau_from_json(std::string_view text);
domino_tableau domino_from_json(std::string_view text);

/// Grid rendering: one row per line, entries space-separated; empty string for
/// the empty tableau.
std::string to_text(const tableau& T);

/// Box-drawing rendering with +, - and | walls; each cell shows its domino's
/// label and walls are omitted inside a domino. Single cells of an odd-n bottom
/// row draw as 1x1 boxes.
std::string to_text(const domino_tableau& D);

/// One-line human rendering of a report (no timing, so output is stable).
std::string to_text(const verification_report& report);

} // namespace domtab
