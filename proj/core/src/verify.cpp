#include "domtab/verify.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "domtab/domino.hpp"
#include "domtab/serialize.hpp"
#include "domtab/sym_action.hpp"

namespace domtab {

namespace {

using clock = std::chrono::steady_clock;

std::chrono::milliseconds since(clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);
}

// ---------------------------------------------------------------------------
// Shape-class enumeration with a small per-n cache. Only modest entry bounds
// are cached; big sweeps (n >= 7) enumerate per shape and free the storage when
// the shape class is done.

using tableau_list = std::shared_ptr<const std::vector<tableau>>;

tableau_list class_of(const partition& shape, int n) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<int>, int>, tableau_list> cache;
    const bool cacheable = n <= 6;
    if (cacheable) {
        std::lock_guard lock(mu);
        auto it = cache.find({shape.parts(), n});
        if (it != cache.end())
            return it->second;
    }
    auto list = std::make_shared<std::vector<tableau>>(enumerate_tableaux(shape, n));
    if (cacheable) {
        std::lock_guard lock(mu);
        cache.emplace(std::make_pair(shape.parts(), n), list);
    }
    return list;
}

std::vector<partition> shapes_of(const domain_bounds& domain) {
    if (domain.shape)
        return {*domain.shape};
    return partitions_in_box(domain.box_rows, domain.box_cols);
}

tableau_list domain_class(const domain_bounds& domain, const partition& shape) {
    if (domain.weight)
        return std::make_shared<std::vector<tableau>>(
            enumerate_tableaux_weight(shape, *domain.weight));
    return class_of(shape, domain.n);
}

// ---------------------------------------------------------------------------
// Generic pointwise scan. Each task is checked over the whole domain before
// the next starts; the first failing task stops the suite with the least
// witness (in shape order, then chain order). Sharded scans agree with the
// serial one because every shard reports its least violating index.

struct check_task {
    std::string label;
    std::function<std::optional<counterexample_info>(const tableau&)> test;
};

std::optional<std::size_t> least_violation(const std::vector<tableau>& tabs,
                                           const check_task& task, int threads) {
    const std::size_t n = tabs.size();
    if (threads <= 1 || n < 4096) {
        for (std::size_t k = 0; k < n; ++k)
            if (task.test(tabs[k]))
                return k;
        return std::nullopt;
    }
    int workers = std::min<int>(threads, static_cast<int>((n + 4095) / 4096));
    std::vector<std::size_t> found(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> pool;
    std::size_t stride = (n + static_cast<std::size_t>(workers) - 1) /
                         static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::size_t lo = static_cast<std::size_t>(w) * stride;
            std::size_t hi = std::min(n, lo + stride);
            for (std::size_t k = lo; k < hi; ++k)
                if (task.test(tabs[k])) {
                    found[static_cast<std::size_t>(w)] = k;
                    return;
                }
        });
    }
    for (auto& th : pool)
        th.join();
    std::size_t best = *std::min_element(found.begin(), found.end());
    if (best == n)
        return std::nullopt;
    return best;
}

verification_report run_tasks(std::string suite, const domain_bounds& domain,
                              std::span<const check_task> tasks, int threads) {
    auto start = clock::now();
    verification_report report;
    report.suite = std::move(suite);
    report.domain = domain;

    std::vector<partition> shapes = shapes_of(domain);
    for (const check_task& task : tasks) {
        for (const partition& shape : shapes) {
            tableau_list tabs = domain_class(domain, shape);
            auto hit = least_violation(*tabs, task, threads);
            if (hit) {
                report.checked += static_cast<std::uint64_t>(*hit) + 1;
                report.outcome = check_outcome::counterexample;
                report.witness = task.test((*tabs)[*hit]);
                report.witness->note = task.label;
                report.elapsed = since(start);
                return report;
            }
            report.checked += tabs->size();
        }
    }
    report.elapsed = since(start);
    return report;
}

// identity task: both expansions precomputed once
check_task identity_task(const operator_word& lhs, const operator_word& rhs, int n,
                         std::string label = {}) {
    auto lhs_idx = std::make_shared<std::vector<int>>(expand_to_t_indices(lhs, n));
    auto rhs_idx = std::make_shared<std::vector<int>>(expand_to_t_indices(rhs, n));
    if (label.empty())
        label = lhs.str() + " = " + (rhs.empty() ? "id" : rhs.str());
    std::string lhs_text = lhs.str(), rhs_text = rhs.str();
    return {std::move(label),
            [lhs_idx, rhs_idx, lhs_text, rhs_text](const tableau& T)
                -> std::optional<counterexample_info> {
                tableau a = apply_t_word(*lhs_idx, T);
                tableau b = apply_t_word(*rhs_idx, T);
                if (a == b)
                    return std::nullopt;
                return counterexample_info{T, lhs_text, rhs_text, std::move(a),
                                           std::move(b), {}};
            }};
}

operator_word word_of(std::initializer_list<op_factor> factors) {
    return operator_word(std::vector<op_factor>(factors));
}

operator_word power(const operator_word& base, int times) {
    std::vector<op_factor> factors;
    for (int k = 0; k < times; ++k)
        factors.insert(factors.end(), base.factors().begin(), base.factors().end());
    return operator_word(std::move(factors));
}

std::vector<int> swapped_coords(std::vector<int> v, int i) {
    std::swap(v[static_cast<std::size_t>(i) - 1], v[static_cast<std::size_t>(i)]);
    return v;
}

// ---------------------------------------------------------------------------
// Suite builders.

std::vector<check_task> suite_eq15(int n) {
    std::vector<check_task> tasks;
    for (int i = 1; i <= n - 1; ++i)
        tasks.push_back(identity_task(word_of({{op_kind::t, i}, {op_kind::t, i}}),
                                      operator_word(), n));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            tasks.push_back(identity_task(word_of({{op_kind::t, i}, {op_kind::t, j}}),
                                          word_of({{op_kind::t, j}, {op_kind::t, i}}), n));
    return tasks;
}

std::vector<check_task> suite_thm15(int n) {
    std::vector<check_task> tasks;
    for (int i = 1; i <= n - 1; ++i)
        tasks.push_back(identity_task(word_of({{op_kind::s, i}, {op_kind::s, i}}),
                                      operator_word(), n));
    for (int i = 1; i <= n - 2; ++i)
        tasks.push_back(identity_task(
            power(word_of({{op_kind::s, i}, {op_kind::s, i + 1}}), 3), operator_word(), n));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            tasks.push_back(identity_task(word_of({{op_kind::s, i}, {op_kind::s, j}}),
                                          word_of({{op_kind::s, j}, {op_kind::s, i}}), n));
    // s_i swaps weight coordinates i, i+1
    for (int i = 1; i <= n - 1; ++i) {
        operator_word w = word_of({{op_kind::s, i}});
        auto idx = std::make_shared<std::vector<int>>(expand_to_t_indices(w, n));
        tasks.push_back(
            {"weight(s" + std::to_string(i) + "(T)) = (i,i+1) weight(T)",
             [idx, i, w](const tableau& T) -> std::optional<counterexample_info> {
                 tableau image = apply_t_word(*idx, T);
                 if (image.weight() == swapped_coords(T.weight(), i))
                     return std::nullopt;
                 return counterexample_info{T, w.str(), "", image, std::nullopt,
                                            "weight not transposed"};
             }});
    }
    return tasks;
}

std::vector<check_task> suite_eq21_25(int n) {
    std::vector<check_task> tasks;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
            if (std::abs(i - j) > 1)
                tasks.push_back(identity_task(word_of({{op_kind::s, i}, {op_kind::t, j}}),
                                              word_of({{op_kind::t, j}, {op_kind::s, i}}), n));
    for (int i = 2; i <= n - 2; ++i)
        for (int j = 1; j <= n - 1; ++j)
            if (std::abs(i - j) > 2)
                tasks.push_back(
                    identity_task(word_of({{op_kind::sigma, i}, {op_kind::t, j}}),
                                  word_of({{op_kind::t, j}, {op_kind::sigma, i}}), n));
    // the recursion step and its strengthening to any larger pivot
    for (int j = 2; j <= n - 1; ++j)
        tasks.push_back(identity_task(
            word_of({{op_kind::s, j}}),
            word_of({{op_kind::p, j}, {op_kind::s, j - 1}, {op_kind::p_inv, j}}), n));
    for (int i = 2; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
            tasks.push_back(identity_task(
                word_of({{op_kind::s, i}}),
                word_of({{op_kind::p, j}, {op_kind::s, i - 1}, {op_kind::p_inv, j}}), n));
    for (int j = 2; j <= n - 1; ++j)
        tasks.push_back(identity_task(
            word_of({{op_kind::t, j - 1}, {op_kind::s, j}, {op_kind::t, j - 1}}),
            word_of({{op_kind::t, j}, {op_kind::s, j - 1}, {op_kind::t, j}}), n));
    return tasks;
}

verification_report suite_eq17(const domain_bounds& domain, int threads) {
    auto start = clock::now();
    verification_report report;
    report.suite = "eq17";
    report.domain = domain;
    int n = domain.n;

    std::string same_index_hits, shifted_misses;
    for (int i = 1; i <= n - 1; ++i) {
        operator_word recursion = word_of({{op_kind::s, i}});
        operator_word same =
            word_of({{op_kind::S_k, i}, {op_kind::t, 1}, {op_kind::S_k, i}});
        operator_word shifted =
            word_of({{op_kind::S_k, i + 1}, {op_kind::t, 1}, {op_kind::S_k, i + 1}});

        check_task same_task = identity_task(recursion, same, n);
        check_task shifted_task = identity_task(recursion, shifted, n);

        bool same_holds = true;
        for (const partition& shape : shapes_of(domain)) {
            tableau_list tabs = domain_class(domain, shape);
            report.checked += tabs->size();
            if (least_violation(*tabs, same_task, threads))
                same_holds = false;
        }
        if (same_holds)
            same_index_hits += (same_index_hits.empty() ? "" : ",") + std::to_string(i);

        for (const partition& shape : shapes_of(domain)) {
            tableau_list tabs = domain_class(domain, shape);
            report.checked += tabs->size();
            if (auto hit = least_violation(*tabs, shifted_task, threads)) {
                shifted_misses += (shifted_misses.empty() ? "" : ",") + std::to_string(i);
                if (report.outcome == check_outcome::verified) {
                    report.outcome = check_outcome::counterexample;
                    report.witness = shifted_task.test((*tabs)[*hit]);
                    report.witness->note = shifted_task.label;
                }
            }
        }
    }
    report.detail = "s_i = S_{i+1} t1 S_{i+1} " +
                    std::string(shifted_misses.empty() ? "holds for all i"
                                                       : "FAILS for i=" + shifted_misses) +
                    "; the unshifted S_i form matches only for i in {" + same_index_hits +
                    "}";
    report.elapsed = since(start);
    return report;
}

std::vector<check_task> suite_lemma13(int n) {
    std::vector<check_task> tasks;
    tasks.push_back(identity_task(
        word_of({{op_kind::P, 0}, {op_kind::D, 0}, {op_kind::P_inv, 0}}),
        word_of({{op_kind::S, 0}}), n));
    return tasks;
}

std::vector<check_task> suite_prop17(int n) {
    std::vector<check_task> tasks;
    int top = n / 2 - 1;
    for (int k = 1; k <= top; ++k)
        tasks.push_back(identity_task(word_of({{op_kind::tau, k}, {op_kind::tau, k}}),
                                      operator_word(), n));
    for (int k = 1; k <= top; ++k)
        tasks.push_back(identity_task(word_of({{op_kind::S, 0}, {op_kind::tau, k}}),
                                      word_of({{op_kind::tau, k}, {op_kind::S, 0}}), n));
    for (int k = 1; k + 1 <= top; ++k)
        tasks.push_back(identity_task(
            power(word_of({{op_kind::tau, k}, {op_kind::tau, k + 1}}), 3),
            operator_word(), n));
    for (int k = 1; k <= top; ++k)
        for (int l = k + 2; l <= top; ++l)
            tasks.push_back(identity_task(word_of({{op_kind::tau, k}, {op_kind::tau, l}}),
                                          word_of({{op_kind::tau, l}, {op_kind::tau, k}}), n));
    return tasks;
}

std::vector<check_task> suite_thm18(int n) {
    std::vector<check_task> tasks;
    for (int k = 1; k <= n / 2 - 1; ++k)
        tasks.push_back(identity_task(
            word_of({{op_kind::P_inv, 0}, {op_kind::tau, k}, {op_kind::P, 0}}),
            word_of({{op_kind::sigma, n - 2 * k}}), n));
    return tasks;
}

std::vector<check_task> suite_eq111(int n) {
    std::vector<check_task> tasks;
    for (int i = 1; i <= n - 1; ++i)
        tasks.push_back(identity_task(
            word_of({{op_kind::S, 0}, {op_kind::s, i}, {op_kind::S, 0}}),
            word_of({{op_kind::s, n - i}}), n));
    return tasks;
}

verification_report suite_thm16a(const domain_bounds& domain, int threads) {
    auto start = clock::now();
    verification_report report;
    report.suite = "thm16a";
    report.domain = domain;
    int n = domain.n;

    // commuting side, pointwise
    std::vector<check_task> tasks;
    for (int i = 2; i <= n - 2; ++i)
        if ((n - i) % 2 == 0)
            tasks.push_back(identity_task(word_of({{op_kind::D, 0}, {op_kind::sigma, i}}),
                                          word_of({{op_kind::sigma, i}, {op_kind::D, 0}}), n));
    verification_report part1 = run_tasks("thm16a", domain, tasks, threads);
    report.checked = part1.checked;
    if (!part1.ok()) {
        part1.elapsed = since(start);
        return part1;
    }

    // noncommuting side: hunt a witness for each remaining index, enlarging the
    // box once before giving up
    std::string found_notes;
    for (int i = 2; i <= n - 2; ++i) {
        if ((n - i) % 2 == 0)
            continue;
        operator_word lhs = word_of({{op_kind::D, 0}, {op_kind::sigma, i}});
        operator_word rhs = word_of({{op_kind::sigma, i}, {op_kind::D, 0}});
        check_task task = identity_task(lhs, rhs, n);

        bool found = false;
        for (int attempt = 0; attempt < 2 && !found; ++attempt) {
            domain_bounds search = domain;
            if (attempt == 1) {
                if (domain.box_rows >= 4 && domain.box_cols >= 5)
                    break;
                search.box_rows = std::max(domain.box_rows, 4);
                search.box_cols = std::max(domain.box_cols, 5);
            }
            for (const partition& shape : shapes_of(search)) {
                tableau_list tabs = domain_class(search, shape);
                auto hit = least_violation(*tabs, task, threads);
                report.checked += hit ? static_cast<std::uint64_t>(*hit) + 1 : tabs->size();
                if (hit) {
                    found = true;
                    found_notes += (found_notes.empty() ? "" : "; ") + std::string("D sigma") +
                                   std::to_string(i) + " != sigma" + std::to_string(i) +
                                   " D at " + to_json_string((*tabs)[*hit]);
                    break;
                }
            }
        }
        if (!found) {
            report.outcome = check_outcome::not_found;
            report.detail = "no witness for sigma" + std::to_string(i) +
                            " after enlarging the box to 4x5";
            report.elapsed = since(start);
            return report;
        }
    }
    report.detail = found_notes.empty() ? "no sigma index off the parity class at this n"
                                        : found_notes;
    report.elapsed = since(start);
    return report;
}

int coxeter_order(int dist) {
    if (dist <= 2)
        return 3;
    if (dist == 3)
        return 6;
    return 2;
}

verification_report suite_thm16b(const domain_bounds& domain, int threads) {
    auto start = clock::now();
    verification_report report;
    report.suite = "thm16b";
    report.domain = domain;
    int n = domain.n;
    if (n < 4) {
        report.detail = "no sigma generators below n=4";
        report.elapsed = since(start);
        return report;
    }

    std::vector<std::vector<int>> sigma_words;
    for (int i = 2; i <= n - 2; ++i)
        sigma_words.push_back(
            expand_to_t_indices(word_of({{op_kind::sigma, i}}), n));

    for (const partition& shape : shapes_of(domain)) {
        tableau_list tabs = domain_class(domain, shape);
        const std::vector<tableau>& list = *tabs;
        if (list.empty())
            continue;
        assert(std::is_sorted(list.begin(), list.end()));

        auto index_of = [&](const tableau& T) {
            auto it = std::lower_bound(list.begin(), list.end(), T);
            if (it == list.end() || *it != T)
                throw error("sigma image left its enumerated shape class");
            return static_cast<std::size_t>(it - list.begin());
        };

        // one application per generator per tableau; order checks then walk the
        // index tables
        std::vector<std::vector<std::size_t>> table(sigma_words.size());
        for (std::size_t g = 0; g < sigma_words.size(); ++g) {
            table[g].resize(list.size());
            const auto& word = sigma_words[g];
            auto fill = [&](std::size_t lo, std::size_t hi) {
                for (std::size_t k = lo; k < hi; ++k)
                    table[g][k] = index_of(apply_t_word(word, list[k]));
            };
            if (threads <= 1 || list.size() < 4096) {
                fill(0, list.size());
            } else {
                std::vector<std::thread> pool;
                std::exception_ptr first_error;
                std::mutex error_mu;
                std::size_t stride = (list.size() + static_cast<std::size_t>(threads) - 1) /
                                     static_cast<std::size_t>(threads);
                for (int w = 0; w < threads; ++w) {
                    std::size_t lo = static_cast<std::size_t>(w) * stride;
                    std::size_t hi = std::min(list.size(), lo + stride);
                    if (lo < hi)
                        pool.emplace_back([&, lo, hi] {
                            try {
                                fill(lo, hi);
                            } catch (...) {
                                std::lock_guard lock(error_mu);
                                if (!first_error)
                                    first_error = std::current_exception();
                            }
                        });
                }
                for (auto& th : pool)
                    th.join();
                if (first_error)
                    std::rethrow_exception(first_error);
            }
        }

        for (int i = 2; i <= n - 2; ++i) {
            for (int j = i + 1; j <= n - 2; ++j) {
                int m = coxeter_order(j - i);
                const auto& ti = table[static_cast<std::size_t>(i) - 2];
                const auto& tj = table[static_cast<std::size_t>(j) - 2];
                for (std::size_t k = 0; k < list.size(); ++k) {
                    std::size_t x = k;
                    for (int r = 0; r < m; ++r)
                        x = ti[tj[x]];
                    ++report.checked;
                    if (x != k) {
                        operator_word lhs = power(
                            word_of({{op_kind::sigma, i}, {op_kind::sigma, j}}), m);
                        report.outcome = check_outcome::counterexample;
                        report.witness = counterexample_info{
                            list[k], lhs.str(), "", apply_word(lhs, list[k]),
                            std::nullopt, "order of sigma pair violated"};
                        report.elapsed = since(start);
                        return report;
                    }
                }
            }
        }
    }
    report.elapsed = since(start);
    return report;
}

verification_report suite_eq110(const domain_bounds& domain) {
    auto start = clock::now();
    verification_report report;
    report.suite = "eq110";
    report.domain = domain;
    int n = domain.n;
    for (const partition& shape : shapes_of(domain)) {
        for (const auto& beta_prime : domino_weights(shape.cells(), n)) {
            for (int i = 1; i <= n / 2 - 1; ++i) {
                verification_report one =
                    domino_weight_action_check(shape, beta_prime, i, n);
                report.checked += one.checked + 1;
                if (!one.ok()) {
                    one.checked = report.checked;
                    one.domain = domain;
                    one.elapsed = since(start);
                    return one;
                }
            }
        }
    }
    report.elapsed = since(start);
    return report;
}

verification_report suite_thm12(const domain_bounds& domain) {
    auto start = clock::now();
    verification_report report;
    report.suite = "thm12";
    report.domain = domain;
    for (const partition& shape : shapes_of(domain)) {
        for (const auto& beta_prime : domino_weights(shape.cells(), domain.n)) {
            verification_report one = check_bijection_thm12(shape, beta_prime, domain.n);
            report.checked += one.checked;
            if (!one.ok()) {
                one.checked = report.checked;
                one.domain = domain;
                one.elapsed = since(start);
                return one;
            }
        }
    }
    report.elapsed = since(start);
    return report;
}

verification_report suite_eq01(const domain_bounds& domain) {
    auto start = clock::now();
    verification_report report;
    report.suite = "eq01";
    report.domain = domain;
    std::string signs;
    for (const partition& shape : shapes_of(domain)) {
        verification_report one = check_schur_specialization(shape, domain.n);
        report.checked += one.checked;
        if (!one.ok()) {
            one.checked = report.checked;
            one.domain = domain;
            one.elapsed = since(start);
            return one;
        }
        if (!one.detail.empty())
            signs += (signs.empty() ? "" : "; ") + to_json_string(shape) + ": " + one.detail;
    }
    report.detail = signs;
    report.elapsed = since(start);
    return report;
}

verification_report suite_rho(const domain_bounds& domain, int threads) {
    int n = domain.n;
    std::vector<operator_word> words;
    for (int i = 1; i <= n - 1; ++i) {
        words.push_back(word_of({{op_kind::t, i}}));
        words.push_back(word_of({{op_kind::p, i}}));
        words.push_back(word_of({{op_kind::p_inv, i}}));
        words.push_back(word_of({{op_kind::s, i}}));
    }
    for (int i = 2; i <= n - 2; ++i)
        words.push_back(word_of({{op_kind::sigma, i}}));
    for (int k = 1; k <= n / 2 - 1; ++k)
        words.push_back(word_of({{op_kind::tau, k}}));
    for (int m = 1; m <= n; ++m)
        words.push_back(word_of({{op_kind::S_k, m}}));
    words.push_back(word_of({{op_kind::S, 0}}));
    words.push_back(word_of({{op_kind::D, 0}}));
    words.push_back(word_of({{op_kind::P, 0}}));
    words.push_back(word_of({{op_kind::P_inv, 0}}));
    words.push_back(word_of({{op_kind::P, 0}, {op_kind::D, 0}, {op_kind::P_inv, 0}}));

    std::vector<check_task> tasks;
    for (const operator_word& w : words) {
        auto idx = std::make_shared<std::vector<int>>(expand_to_t_indices(w, n));
        auto perm = std::make_shared<std::vector<int>>(weight_permutation(w, n));
        std::string text = w.str();
        tasks.push_back(
            {"weight moves by rho(" + text + ")",
             [idx, perm, text, n](const tableau& T) -> std::optional<counterexample_info> {
                 tableau image = apply_t_word(*idx, T);
                 std::vector<int> beta = T.weight();
                 std::vector<int> moved(static_cast<std::size_t>(n));
                 for (int c = 0; c < n; ++c)
                     moved[static_cast<std::size_t>((*perm)[static_cast<std::size_t>(c)])] =
                         beta[static_cast<std::size_t>(c)];
                 if (image.weight() == moved)
                     return std::nullopt;
                 return counterexample_info{T, text, "", image, std::nullopt,
                                            "weight does not move by rho"};
             }});
    }
    return run_tasks("rho", domain, tasks, threads);
}

} // namespace

std::int64_t kostka(const partition& shape, std::span<const int> beta) {
    std::int64_t count = 0;
    for_each_tableau_weight(shape, beta, [&](const tableau&) {
        ++count;
        return true;
    });
    return count;
}

std::int64_t kostka2(const partition& shape, std::span<const int> beta_prime, int n) {
    std::vector<int> beta = expanded_domino_weight(beta_prime, n);
    std::int64_t count = 0;
    for_each_tableau_weight(shape, beta, [&](const tableau& T) {
        if (is_domino_fixed(T))
            ++count;
        return true;
    });
    return count;
}

std::int64_t count_self_evacuating(const partition& shape, std::span<const int> beta) {
    int n = static_cast<int>(beta.size());
    operator_word evac = word_of({{op_kind::S, 0}});
    std::vector<int> idx = expand_to_t_indices(evac, n);
    std::int64_t count = 0;
    for_each_tableau_weight(shape, beta, [&](const tableau& T) {
        if (apply_t_word(idx, T) == T)
            ++count;
        return true;
    });
    return count;
}

verification_report check_identity(const operator_word& lhs, const operator_word& rhs,
                                   const domain_bounds& domain, int threads) {
    std::vector<check_task> tasks;
    tasks.push_back(identity_task(lhs, rhs, domain.n));
    std::string name = lhs.str() + " = " + (rhs.empty() ? "id" : rhs.str());
    return run_tasks(std::move(name), domain, tasks, threads);
}

verification_report check_bijection_thm12(const partition& shape,
                                          std::span<const int> beta_prime, int n) {
    auto start = clock::now();
    verification_report report;
    report.suite = "thm12";
    report.domain.n = n;
    report.domain.box_rows = shape.rows();
    report.domain.box_cols = shape.part(1);
    report.domain.shape = shape;
    report.domain.weight = std::vector<int>(beta_prime.begin(), beta_prime.end());

    std::vector<int> beta_d = expanded_domino_weight(beta_prime, n);
    std::vector<int> beta_s = palindromic_weight(beta_prime, n);
    operator_word p_word = word_of({{op_kind::P, 0}});
    std::vector<int> p_idx = expand_to_t_indices(p_word, n);
    std::vector<int> evac_idx = expand_to_t_indices(word_of({{op_kind::S, 0}}), n);

    std::vector<tableau> images;
    bool failed = false;
    for_each_tableau_weight(shape, beta_d, [&](const tableau& T) {
        if (!is_domino_fixed(T))
            return true;
        ++report.checked;
        tableau image = apply_t_word(p_idx, T);
        bool self_evacuating = apply_t_word(evac_idx, image) == image;
        if (!self_evacuating || image.shape() != shape || image.weight() != beta_s) {
            report.outcome = check_outcome::counterexample;
            report.witness = counterexample_info{
                T, "P", "", image, std::nullopt,
                self_evacuating ? "image has the wrong shape or weight"
                                : "image is not self-evacuating"};
            failed = true;
            return false;
        }
        images.push_back(std::move(image));
        return true;
    });
    if (!failed) {
        std::sort(images.begin(), images.end());
        std::int64_t selfevac = count_self_evacuating(shape, beta_s);
        ++report.checked;
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            report.outcome = check_outcome::counterexample;
            report.detail = "P is not injective on this class";
        } else if (static_cast<std::int64_t>(images.size()) != selfevac) {
            report.outcome = check_outcome::counterexample;
            report.detail = "image count " + std::to_string(images.size()) +
                            " != self-evacuating count " + std::to_string(selfevac);
        } else {
            report.detail = std::to_string(images.size()) + " elements matched";
        }
    }
    report.elapsed = since(start);
    return report;
}

signed_monomial_table schur_specialization_table(const partition& shape, int n) {
    signed_monomial_table table;
    int m = (n + 1) / 2;
    for_each_tableau(shape, n, [&](const tableau& T) {
        std::vector<int> beta = T.weight();
        // adjacent variable pairs (n,n-1), (n-2,n-3), ... alternate in sign on
        // their lower member; the leftover lowest variable (odd n) is unsigned
        int sign = 1;
        std::vector<int> expo(static_cast<std::size_t>(m), 0);
        for (int k = 1; k <= n / 2; ++k) {
            int hi = n - 2 * k + 2, lo = n - 2 * k + 1;
            if (beta[static_cast<std::size_t>(lo) - 1] % 2 != 0)
                sign = -sign;
            expo[static_cast<std::size_t>(k) - 1] =
                beta[static_cast<std::size_t>(hi) - 1] + beta[static_cast<std::size_t>(lo) - 1];
        }
        if (n % 2 == 1)
            expo[static_cast<std::size_t>(m) - 1] = beta[0];
        auto [it, inserted] = table.emplace(std::move(expo), sign);
        if (!inserted) {
            it->second += sign;
            if (it->second == 0)
                table.erase(it);
        }
        return true;
    });
    return table;
}

signed_monomial_table domino_count_table(const partition& shape, int n) {
    signed_monomial_table table;
    int m = (n + 1) / 2;
    for (const auto& beta_prime : domino_weights(shape.cells(), n)) {
        std::int64_t count = kostka2(shape, beta_prime, n);
        if (count == 0)
            continue;
        std::vector<int> expo(static_cast<std::size_t>(m), 0);
        for (int k = 1; k <= n / 2; ++k)
            expo[static_cast<std::size_t>(k) - 1] = 2 * beta_prime[static_cast<std::size_t>(k) - 1];
        if (n % 2 == 1)
            expo[static_cast<std::size_t>(m) - 1] = beta_prime[static_cast<std::size_t>(m) - 1];
        table.emplace(std::move(expo), count);
    }
    return table;
}

verification_report check_schur_specialization(const partition& shape, int n) {
    auto start = clock::now();
    verification_report report;
    report.suite = "eq01";
    report.domain.n = n;
    report.domain.box_rows = shape.rows();
    report.domain.box_cols = shape.part(1);
    report.domain.shape = shape;

    signed_monomial_table lhs = schur_specialization_table(shape, n);
    signed_monomial_table rhs = domino_count_table(shape, n);
    report.checked = lhs.size() + rhs.size() + 1;

    auto negated = [](const signed_monomial_table& t) {
        signed_monomial_table out;
        for (const auto& [k, v] : t)
            out.emplace(k, -v);
        return out;
    };

    if (lhs.empty() && rhs.empty()) {
        report.detail = "total cancellation";
    } else if (lhs == rhs) {
        report.detail = "sign +1";
    } else if (lhs == negated(rhs)) {
        report.detail = "sign -1";
    } else {
        report.outcome = check_outcome::counterexample;
        report.detail = "specialized sum does not match the domino table up to one sign";
    }
    report.elapsed = since(start);
    return report;
}

verification_report check_relation_suite(const std::string& name,
                                         const domain_bounds& domain, int threads) {
    int n = domain.n;
    if (name == "eq15")
        return run_tasks(name, domain, suite_eq15(n), threads);
    if (name == "eq17")
        return suite_eq17(domain, threads);
    if (name == "thm15")
        return run_tasks(name, domain, suite_thm15(n), threads);
    if (name == "eq21-25")
        return run_tasks(name, domain, suite_eq21_25(n), threads);
    if (name == "lemma13")
        return run_tasks(name, domain, suite_lemma13(n), threads);
    if (name == "thm16a")
        return suite_thm16a(domain, threads);
    if (name == "thm16b")
        return suite_thm16b(domain, threads);
    if (name == "prop17")
        return run_tasks(name, domain, suite_prop17(n), threads);
    if (name == "thm18")
        return run_tasks(name, domain, suite_thm18(n), threads);
    if (name == "eq111")
        return run_tasks(name, domain, suite_eq111(n), threads);
    if (name == "eq110")
        return suite_eq110(domain);
    if (name == "thm12")
        return suite_thm12(domain);
    if (name == "eq01")
        return suite_eq01(domain);
    if (name == "rho")
        return suite_rho(domain, threads);
    throw unknown_suite("unknown suite '" + name + "'");
}

std::vector<std::string> known_suites() {
    return {"eq15", "eq17", "thm15", "eq21-25", "lemma13", "thm16a", "thm16b",
            "prop17", "thm18", "eq111", "eq110", "thm12", "eq01", "rho"};
}

} // namespace domtab
