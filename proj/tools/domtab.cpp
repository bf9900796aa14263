// Command-line front end: apply operator words, convert between tableau and
// domino form, count, enumerate, and run verification suites.
//
// Exit codes: 0 success / verified, 1 domain-level negative (counterexample,
// not layer-fixed), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "domtab/domino.hpp"
#include "domtab/operators.hpp"
#include "domtab/serialize.hpp"
#include "domtab/sym_action.hpp"
#include "domtab/verify.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_csv(const std::string& text) {
    std::vector<int> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw usage_error("cannot parse integer list '" + text + "'");
        }
    }
    return out;
}

// inline JSON, "-" for stdin, or a file path
std::string read_source(const std::string& src) {
    if (src == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    if (!src.empty() && (src[0] == '{' || src[0] == '['))
        return src;
    std::ifstream in(src);
    if (!in)
        throw usage_error("cannot open input file '" + src + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

domtab::tableau load_tableau(const std::string& input, const std::string& grid, int n) {
    if (!grid.empty()) {
        if (n <= 0)
            throw usage_error("--grid needs --n");
        json rows = json::parse(grid);
        std::vector<std::vector<int>> g;
        for (const auto& row : rows)
            g.push_back(row.get<std::vector<int>>());
        return domtab::tableau::from_grid(g, n);
    }
    if (input.empty())
        throw usage_error("provide a tableau via --input or --grid");
    domtab::tableau T = domtab::tableau_from_json(read_source(input));
    if (n > 0 && n != T.n())
        throw usage_error("--n disagrees with the input tableau");
    return T;
}

void print_tableau(const domtab::tableau& T, const std::string& format) {
    if (format == "grid")
        std::cout << domtab::to_text(T);
    else
        std::cout << domtab::to_json_string(T) << '\n';
}

int cmd_apply(const std::string& word_text, const std::string& input,
              const std::string& grid, int n, const std::string& format) {
    domtab::tableau T = load_tableau(input, grid, n);
    domtab::operator_word word = domtab::operator_word::parse(word_text, T.n());
    print_tableau(domtab::apply_word(word, T), format);
    return exit_ok;
}

int cmd_convert(const std::string& direction, const std::string& input,
                const std::string& grid, int n, const std::string& format) {
    if (direction == "to-domino") {
        domtab::tableau T = load_tableau(input, grid, n);
        domtab::domino_tableau D = domtab::domino_from_tableau(T); // may throw not_domino_fixed
        if (format == "text" || format == "grid")
            std::cout << domtab::to_text(D);
        else
            std::cout << domtab::to_json_string(D) << '\n';
        return exit_ok;
    }
    if (direction == "to-tableau") {
        if (input.empty())
            throw usage_error("provide a domino tableau via --input");
        domtab::domino_tableau D = domtab::domino_from_json(read_source(input));
        print_tableau(domtab::tableau_from_domino(D), format == "grid" ? "grid" : "json");
        return exit_ok;
    }
    throw usage_error("direction must be to-domino or to-tableau");
}

std::string weight_str(const std::vector<int>& w) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k)
        out += (k ? "," : "") + std::to_string(w[k]);
    return out;
}

int cmd_count(const std::string& kind, const std::string& shape_csv,
              std::optional<std::string> weight_csv, int n, bool all_weights) {
    domtab::partition shape(parse_csv(shape_csv));
    if (n <= 0)
        throw usage_error("--n must be positive");
    if (shape.rows() > n)
        throw usage_error("shape has more rows than the entry bound");

    auto pad = [](std::vector<int> v, int len) {
        if (static_cast<int>(v.size()) > len)
            throw usage_error("weight has too many coordinates");
        v.resize(static_cast<std::size_t>(len), 0);
        return v;
    };

    if (all_weights) {
        if (kind == "kostka2") {
            for (const auto& bp : domtab::domino_weights(shape.cells(), n)) {
                auto c = domtab::kostka2(shape, bp, n);
                if (c)
                    std::cout << weight_str(bp) << ": " << c << '\n';
            }
        } else {
            for (const auto& beta : domtab::weight_compositions(shape.cells(), n)) {
                auto c = kind == "kostka" ? domtab::kostka(shape, beta)
                                          : domtab::count_self_evacuating(shape, beta);
                if (c)
                    std::cout << weight_str(beta) << ": " << c << '\n';
            }
        }
        return exit_ok;
    }

    if (!weight_csv)
        throw usage_error("provide --weight or --all-weights");
    std::vector<int> w = parse_csv(*weight_csv);
    if (kind == "kostka" || kind == "selfevac") {
        w = pad(std::move(w), n);
        int total = 0;
        for (int v : w)
            total += v;
        if (total != shape.cells())
            throw usage_error("weight sums to " + std::to_string(total) + ", shape has " +
                              std::to_string(shape.cells()) + " cells");
        std::cout << (kind == "kostka" ? domtab::kostka(shape, w)
                                       : domtab::count_self_evacuating(shape, w))
                  << '\n';
        return exit_ok;
    }
    if (kind == "kostka2") {
        w = pad(std::move(w), (n + 1) / 2);
        std::vector<int> expanded = domtab::expanded_domino_weight(w, n);
        int total = 0;
        for (int v : expanded)
            total += v;
        if (total != shape.cells())
            throw usage_error("domino weight fills " + std::to_string(total) +
                              " cells, shape has " + std::to_string(shape.cells()));
        std::cout << domtab::kostka2(shape, w, n) << '\n';
        return exit_ok;
    }
    throw usage_error("count kind must be kostka, kostka2 or selfevac");
}

int cmd_enumerate(const std::string& kind, const std::string& shape_csv,
                  std::optional<std::string> weight_csv, int n, long long limit,
                  bool count_only) {
    domtab::partition shape(parse_csv(shape_csv));
    if (n <= 0)
        throw usage_error("--n must be positive");

    long long emitted = 0;
    auto emit = [&](const std::string& line) {
        if (limit >= 0 && emitted >= limit)
            return false;
        ++emitted;
        if (!count_only)
            std::cout << line << '\n';
        return true;
    };

    if (kind == "tableaux") {
        auto visit = [&](const domtab::tableau& T) { return emit(domtab::to_json_string(T)); };
        if (weight_csv) {
            std::vector<int> beta = parse_csv(*weight_csv);
            beta.resize(static_cast<std::size_t>(n), 0);
            domtab::for_each_tableau_weight(shape, beta, visit);
        } else {
            domtab::for_each_tableau(shape, n, visit);
        }
    } else if (kind == "domino") {
        std::vector<std::vector<int>> weights;
        if (weight_csv) {
            std::vector<int> bp = parse_csv(*weight_csv);
            bp.resize(static_cast<std::size_t>((n + 1) / 2), 0);
            weights.push_back(std::move(bp));
        } else {
            weights = domtab::domino_weights(shape.cells(), n);
        }
        bool keep_going = true;
        for (const auto& bp : weights) {
            if (!keep_going)
                break;
            for (const auto& D : domtab::enumerate_domino(shape, bp, n))
                if (!(keep_going = emit(domtab::to_json_string(D))))
                    break;
        }
    } else {
        throw usage_error("enumerate kind must be tableaux or domino");
    }

    if (count_only)
        std::cout << emitted << '\n';
    return exit_ok;
}

int cmd_verify(std::string suite, std::string lhs, std::string rhs, int n, std::string box,
               const std::string& config, bool as_json, int threads) {
    domtab::domain_bounds domain;
    bool have_rhs = !rhs.empty();
    if (!config.empty()) {
        json cfg = json::parse(read_source(config));
        if (cfg.contains("suite"))
            suite = cfg.at("suite").get<std::string>();
        if (cfg.contains("lhs"))
            lhs = cfg.at("lhs").get<std::string>();
        if (cfg.contains("rhs")) {
            rhs = cfg.at("rhs").get<std::string>();
            have_rhs = true;
        }
        if (cfg.contains("n"))
            n = cfg.at("n").get<int>();
        if (cfg.contains("box")) {
            const auto& b = cfg.at("box");
            domain.box_rows = b.at(0).get<int>();
            domain.box_cols = b.at(1).get<int>();
            box.clear();
        }
    }
    if (suite.empty() && lhs.empty() && !have_rhs)
        throw usage_error("name a suite or give --lhs/--rhs words (or --config)");
    if (n > 0)
        domain.n = n;
    if (!box.empty()) {
        auto x = box.find('x');
        if (x == std::string::npos)
            throw usage_error("--box expects RxC, e.g. 3x4");
        try {
            domain.box_rows = std::stoi(box.substr(0, x));
            domain.box_cols = std::stoi(box.substr(x + 1));
        } catch (const std::exception&) {
            throw usage_error("--box expects RxC, e.g. 3x4");
        }
    }

    domtab::verification_report report =
        !suite.empty()
            ? domtab::check_relation_suite(suite, domain, threads) // throws unknown_suite
            : domtab::check_identity(domtab::operator_word::parse(lhs, domain.n),
                                     domtab::operator_word::parse(rhs, domain.n), domain,
                                     threads);
    if (as_json) {
        std::cout << domtab::to_json_string(report) << '\n';
    } else {
        std::cout << domtab::to_text(report) << '\n';
        if (report.witness)
            std::cout << domtab::to_json_string(report.witness->witness) << '\n';
    }
    return report.ok() ? exit_ok : exit_negative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tableau operator words, domino encodings and identity sweeps"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    bool as_json = false;
    int threads = 1;
    app.add_option("--format", format, "output format: json|grid|text")->capture_default_str();
    app.add_flag("--json", as_json, "emit verification reports as JSON");
    app.add_option("--threads", threads, "worker threads for verify sweeps")
        ->capture_default_str();

    std::string word_text, input, grid, shape_csv, box, config, direction, kind, suite;
    std::optional<std::string> weight_csv;
    int n = 0;
    bool all_weights = false, count_only = false;
    long long limit = -1;

    CLI::App* apply = app.add_subcommand("apply", "apply an operator word to a tableau");
    apply->add_option("--word", word_text, "operator word, leftmost factor applied last")
        ->required();
    apply->add_option("--input", input, "tableau JSON (inline, file path, or - for stdin)");
    apply->add_option("--grid", grid, "inline JSON grid, e.g. [[1,2],[3]]");
    apply->add_option("--n", n, "entry bound (required with --grid)");

    CLI::App* convert = app.add_subcommand("convert", "convert tableau <-> domino form");
    convert->add_option("direction", direction, "to-domino | to-tableau")->required();
    convert->add_option("--input", input, "input JSON (inline, file path, or - for stdin)");
    convert->add_option("--grid", grid, "inline JSON grid (to-domino only)");
    convert->add_option("--n", n, "entry bound (required with --grid)");

    CLI::App* count = app.add_subcommand("count", "Kostka / domino / self-evacuating counts");
    count->add_option("kind", kind, "kostka | kostka2 | selfevac")->required();
    count->add_option("--shape", shape_csv, "shape as comma-separated parts")->required();
    count->add_option("--weight", weight_csv, "weight as comma-separated entries");
    count->add_option("--n", n, "entry bound")->required();
    count->add_flag("--all-weights", all_weights, "print every nonzero count");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name, e.g. lemma13, thm16b, eq110");
    verify->add_option("--n", n, "entry bound");
    verify->add_option("--box", box, "shape box RxC, e.g. 3x4");
    verify->add_option("--config", config, "JSON config {\"suite\":..,\"n\":..,\"box\":[r,c]}");
    std::string lhs_word, rhs_word;
    verify->add_option("--lhs", lhs_word, "check a custom identity: left word");
    verify->add_option("--rhs", rhs_word, "right word (default: the identity)");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list tableaux or domino tableaux");
    enumerate->add_option("kind", kind, "tableaux | domino")->required();
    enumerate->add_option("--shape", shape_csv, "shape as comma-separated parts")->required();
    enumerate->add_option("--weight", weight_csv, "weight filter");
    enumerate->add_option("--n", n, "entry bound")->required();
    enumerate->add_option("--limit", limit, "stop after this many lines");
    enumerate->add_flag("--count", count_only, "print only the total");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (apply->parsed())
            return cmd_apply(word_text, input, grid, n, format);
        if (convert->parsed())
            return cmd_convert(direction, input, grid, n, format);
        if (count->parsed())
            return cmd_count(kind, shape_csv, weight_csv, n, all_weights);
        if (verify->parsed())
            return cmd_verify(suite, lhs_word, rhs_word, n, box, config, as_json, threads);
        if (enumerate->parsed())
            return cmd_enumerate(kind, shape_csv, weight_csv, n, limit, count_only);
    } catch (const domtab::not_domino_fixed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_negative;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const domtab::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
