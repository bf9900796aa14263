#include "domtab/sym_action.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "domtab/domino.hpp"
#include "domtab/operators.hpp"

namespace domtab {

tableau s_action(const tableau& T, int i) {
    if (i < 1 || i > T.n() - 1)
        throw index_out_of_range("s index " + std::to_string(i) +
                                 " out of range for n=" + std::to_string(T.n()));
    return apply_word(operator_word({{op_kind::s, i}}), T);
}

tableau sigma_action(const tableau& T, int i) {
    if (T.n() < 4 || i < 2 || i > T.n() - 2)
        throw index_out_of_range("sigma index " + std::to_string(i) +
                                 " out of range for n=" + std::to_string(T.n()));
    return apply_word(operator_word({{op_kind::sigma, i}}), T);
}

tableau tau_action(const tableau& T, int k) {
    if (k < 1 || k > T.n() / 2 - 1)
        throw index_out_of_range("tau index " + std::to_string(k) +
                                 " out of range for n=" + std::to_string(T.n()));
    return apply_word(operator_word({{op_kind::tau, k}}), T);
}

verification_report domino_weight_action_check(const partition& shape,
                                               std::span<const int> beta_prime,
                                               int i, int n) {
    auto start = std::chrono::steady_clock::now();
    verification_report report;
    report.suite = "eq110";
    report.domain.n = n;
    report.domain.box_rows = shape.rows();
    report.domain.box_cols = shape.part(1);
    report.domain.shape = shape;
    report.domain.weight = std::vector<int>(beta_prime.begin(), beta_prime.end());

    int m = (n + 1) / 2;
    if (i < 1 || i >= n / 2 || i + 1 > m)
        throw index_out_of_range("weight transposition index " + std::to_string(i) +
                                 " out of range for n=" + std::to_string(n));

    std::vector<int> swapped(beta_prime.begin(), beta_prime.end());
    std::swap(swapped[static_cast<std::size_t>(i) - 1], swapped[static_cast<std::size_t>(i)]);

    std::vector<domino_tableau> source = enumerate_domino(shape, beta_prime, n);
    std::vector<domino_tableau> target = enumerate_domino(shape, swapped, n);

    operator_word word({{op_kind::sigma, n - 2 * i}});
    std::vector<tableau> images;
    images.reserve(source.size());
    for (const domino_tableau& d : source) {
        tableau T = tableau_from_domino(d);
        tableau image = apply_word(word, T);
        ++report.checked;
        if (!is_domino_fixed(image) || image.shape() != shape ||
            image.weight() != expanded_domino_weight(swapped, n)) {
            report.outcome = check_outcome::counterexample;
            report.witness = counterexample_info{T, word.str(), "", image, std::nullopt,
                                                 "image leaves the target weight class"};
            break;
        }
        images.push_back(std::move(image));
    }
    if (report.outcome == check_outcome::verified) {
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            report.outcome = check_outcome::counterexample;
            report.detail = "sigma" + std::to_string(n - 2 * i) + " is not injective here";
        } else if (images.size() != target.size()) {
            report.outcome = check_outcome::counterexample;
            report.detail = "image size " + std::to_string(images.size()) +
                            " != target size " + std::to_string(target.size());
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace domtab
