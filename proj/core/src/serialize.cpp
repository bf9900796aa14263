#include "domtab/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace domtab {

namespace {

using nlohmann::json;

json partition_json(const partition& p) { return json(p.parts()); }

partition partition_from(const json& j) {
    if (!j.is_array())
        throw error("partition must be a JSON array of integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw error("partition entries must be integers");
        parts.push_back(v.get<int>());
    }
    return partition(std::move(parts));
}

json tableau_json(const tableau& T) {
    json chain = json::array();
    for (const partition& level : T.chain())
        chain.push_back(partition_json(level));
    return json{{"n", T.n()}, {"chain", std::move(chain)}};
}

tableau tableau_from(const json& j) {
    if (!j.is_object() || !j.contains("n"))
        throw error("tableau JSON must be an object with an \"n\" field");
    int n = j.at("n").get<int>();
    if (j.contains("chain")) {
        std::vector<partition> chain;
        for (const auto& level : j.at("chain"))
            chain.push_back(partition_from(level));
        return tableau::from_chain(n, std::move(chain));
    }
    if (j.contains("grid")) {
        std::vector<std::vector<int>> grid;
        for (const auto& row : j.at("grid"))
            grid.push_back(row.get<std::vector<int>>());
        return tableau::from_grid(grid, n);
    }
    throw error("tableau JSON needs a \"chain\" or \"grid\" field");
}

json cell_json(const cell& c) { return json::array({c.row, c.col}); }

cell cell_from(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw error("cell must be a [row, col] pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

json domino_json(const domino_tableau& D) {
    json chain = json::array();
    for (const partition& level : D.chain())
        chain.push_back(partition_json(level));
    json tilings = json::array();
    for (const auto& layer : D.tilings()) {
        json placements = json::array();
        for (const domino_placement& d : layer)
            placements.push_back(json{{"cells", json::array({cell_json(d.first), cell_json(d.second)})},
                                      {"label", d.label}});
        tilings.push_back(std::move(placements));
    }
    return json{{"n", D.n()}, {"chain", std::move(chain)}, {"tilings", std::move(tilings)}};
}

domino_tableau domino_from(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("chain") || !j.contains("tilings"))
        throw error("domino JSON must carry \"n\", \"chain\" and \"tilings\"");
    int n = j.at("n").get<int>();
    std::vector<partition> chain;
    for (const auto& level : j.at("chain"))
        chain.push_back(partition_from(level));
    std::vector<std::vector<domino_placement>> tilings;
    for (const auto& layer : j.at("tilings")) {
        std::vector<domino_placement> placements;
        for (const auto& p : layer) {
            const auto& cells = p.at("cells");
            if (!cells.is_array() || cells.size() != 2)
                throw error("placement \"cells\" must hold two cells");
            placements.push_back(
                {cell_from(cells[0]), cell_from(cells[1]), p.value("label", 1)});
        }
        tilings.push_back(std::move(placements));
    }
    return domino_tableau::from_parts(n, std::move(chain), std::move(tilings));
}

const char* outcome_name(check_outcome o) {
    switch (o) {
    case check_outcome::verified: return "Verified";
    case check_outcome::counterexample: return "Counterexample";
    case check_outcome::not_found: return "NotFound";
    }
    return "?";
}

json report_json(const verification_report& r) {
    json domain{{"n", r.domain.n}, {"box", json::array({r.domain.box_rows, r.domain.box_cols})}};
    if (r.domain.shape)
        domain["shape"] = partition_json(*r.domain.shape);
    if (r.domain.weight)
        domain["weight"] = json(*r.domain.weight);
    json out{{"suite", r.suite},
             {"domain", std::move(domain)},
             {"checked", r.checked},
             {"outcome", outcome_name(r.outcome)},
             {"elapsed_ms", r.elapsed.count()}};
    if (!r.detail.empty())
        out["detail"] = r.detail;
    if (r.witness) {
        json w{{"tableau", tableau_json(r.witness->witness)},
               {"lhs", r.witness->lhs},
               {"rhs", r.witness->rhs}};
        if (r.witness->lhs_value)
            w["lhs_value"] = tableau_json(*r.witness->lhs_value);
        if (r.witness->rhs_value)
            w["rhs_value"] = tableau_json(*r.witness->rhs_value);
        if (!r.witness->note.empty())
            w["note"] = r.witness->note;
        out["witness"] = std::move(w);
    }
    return out;
}

} // namespace

std::string to_json_string(const partition& p) { return partition_json(p).dump(); }
std::string to_json_string(const tableau& T) { return tableau_json(T).dump(); }
std::string to_json_string(const domino_tableau& D) { return domino_json(D).dump(); }
std::string to_json_string(const verification_report& r) { return report_json(r).dump(); }

partition partition_from_json(std::string_view text) {
    return partition_from(json::parse(text));
}

tableau tableau_from_json(std::string_view text) {
    return tableau_from(json::parse(text));
}

domino_tableau domino_from_json(std::string_view text) {
    return domino_from(json::parse(text));
}

std::string to_text(const tableau& T) {
    std::ostringstream out;
    for (const auto& row : T.to_grid()) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? " " : "") << row[c];
        out << '\n';
    }
    return out.str();
}

std::string to_text(const domino_tableau& D) {
    const partition& shape = D.shape();
    int rows = shape.rows();
    int cols = shape.part(1);
    if (rows == 0)
        return "";

    // label per cell and same-domino grouping for wall suppression
    std::vector<std::vector<int>> label(static_cast<std::size_t>(rows),
                                        std::vector<int>(static_cast<std::size_t>(cols), 0));
    std::vector<std::vector<int>> group(static_cast<std::size_t>(rows),
                                        std::vector<int>(static_cast<std::size_t>(cols), -1));
    int next_group = 0;
    if (D.epsilon() == 1)
        for (int c = 1; c <= D.chain().front().part(1); ++c) {
            label[0][static_cast<std::size_t>(c) - 1] = (D.n() + 1) / 2;
            group[0][static_cast<std::size_t>(c) - 1] = next_group++;
        }
    for (const auto& layer : D.tilings())
        for (const domino_placement& d : layer) {
            for (const cell& c : {d.first, d.second}) {
                label[static_cast<std::size_t>(c.row) - 1][static_cast<std::size_t>(c.col) - 1] =
                    d.label;
                group[static_cast<std::size_t>(c.row) - 1][static_cast<std::size_t>(c.col) - 1] =
                    next_group;
            }
            ++next_group;
        }

    auto in_shape = [&](int r, int c) {
        return r >= 1 && r <= rows && c >= 1 && c <= shape.part(r);
    };
    auto grp = [&](int r, int c) {
        return in_shape(r, c)
                   ? group[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1]
                   : -2;
    };
    // wall between vertically adjacent cells (boundary y = 0..rows, column c)
    auto hwall = [&](int y, int c) {
        if (c < 1 || c > cols)
            return false;
        bool a = in_shape(y, c), b = in_shape(y + 1, c);
        return (a || b) && grp(y, c) != grp(y + 1, c);
    };
    // wall between horizontally adjacent cells (row r, boundary x = 0..cols)
    auto vwall = [&](int r, int x) {
        if (r < 1 || r > rows)
            return false;
        bool a = in_shape(r, x), b = in_shape(r, x + 1);
        return (a || b) && grp(r, x) != grp(r, x + 1);
    };

    int width = 1;
    for (const auto& row : label)
        for (int v : row)
            width = std::max(width, static_cast<int>(std::to_string(v).size()));
    int cellw = width + 2;

    std::vector<std::string> canvas(static_cast<std::size_t>(2 * rows + 1),
                                    std::string(static_cast<std::size_t>(cols * cellw + 1), ' '));
    // wall segments
    for (int y = 0; y <= rows; ++y)
        for (int c = 1; c <= cols; ++c)
            if (hwall(y, c))
                for (int k = 1; k < cellw; ++k)
                    canvas[static_cast<std::size_t>(2 * y)]
                          [static_cast<std::size_t>((c - 1) * cellw + k)] = '-';
    for (int r = 1; r <= rows; ++r)
        for (int x = 0; x <= cols; ++x)
            if (vwall(r, x))
                canvas[static_cast<std::size_t>(2 * r - 1)]
                      [static_cast<std::size_t>(x * cellw)] = '|';
    // lattice points
    for (int y = 0; y <= rows; ++y)
        for (int x = 0; x <= cols; ++x) {
            bool h_left = x >= 1 && hwall(y, x);
            bool h_right = hwall(y, x + 1);
            bool v_up = y >= 1 && vwall(y, x);
            bool v_down = vwall(y + 1, x);
            char ch = ' ';
            if ((v_up || v_down) && (h_left || h_right))
                ch = '+';
            else if (v_up && v_down)
                ch = '|';
            else if (v_up || v_down)
                ch = '+';
            else if (h_left && h_right)
                ch = '-';
            else if (h_left || h_right)
                ch = '+';
            if (ch != ' ')
                canvas[static_cast<std::size_t>(2 * y)][static_cast<std::size_t>(x * cellw)] = ch;
        }
    // labels
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= shape.part(r); ++c) {
            std::string text = std::to_string(
                label[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1]);
            int x = (c - 1) * cellw;
            int pad = (cellw - 1 - static_cast<int>(text.size())) / 2;
            for (std::size_t k = 0; k < text.size(); ++k)
                canvas[static_cast<std::size_t>(2 * r - 1)]
                      [static_cast<std::size_t>(x + 1 + pad) + k] = text[k];
        }

    std::ostringstream out;
    for (const std::string& line : canvas) {
        std::string_view v(line);
        while (!v.empty() && v.back() == ' ')
            v.remove_suffix(1);
        if (!v.empty())
            out << v << '\n';
    }
    return out.str();
}

std::string to_text(const verification_report& r) {
    std::ostringstream out;
    out << r.suite << " n=" << r.domain.n << " box=" << r.domain.box_rows << "x"
        << r.domain.box_cols;
    if (r.domain.shape)
        out << " shape=" << to_json_string(*r.domain.shape);
    if (r.domain.weight) {
        out << " weight=[";
        for (std::size_t k = 0; k < r.domain.weight->size(); ++k)
            out << (k ? "," : "") << (*r.domain.weight)[k];
        out << "]";
    }
    out << ": " << outcome_name(r.outcome) << " (checked " << r.checked << ")";
    if (!r.detail.empty())
        out << " -- " << r.detail;
    return out.str();
}

} // namespace domtab
