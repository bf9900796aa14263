#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "domtab/operators.hpp"
#include "oracles.hpp"

using namespace domtab;

namespace {

tableau grid(std::initializer_list<std::vector<int>> rows, int n) {
    return tableau::from_grid(std::vector<std::vector<int>>(rows), n);
}

// every valid skew 2-tableau triple with outer shape inside the box
template <typename Fn>
void for_each_two_tableau(int box_rows, int box_cols, Fn&& fn) {
    std::vector<partition> all = partitions_in_box(box_rows, box_cols);
    for (const partition& upper : all)
        for (const partition& lower : all) {
            if (!contains(lower, upper))
                continue;
            for (const partition& middle : oracles::partitions_between(lower, upper))
                if (is_horizontal_strip(middle, lower) && is_horizontal_strip(upper, middle))
                    fn(lower, middle, upper);
        }
}

} // namespace

TEST_CASE("bk_skew examples") {
    CHECK(bk_skew(partition(), partition({3}), partition({3, 1})) == partition({1}));
    CHECK(bk_skew(partition(), partition({2}), partition({3, 1})) == partition({2}));
    partition lam({2, 1});
    CHECK(bk_skew(lam, lam, lam) == lam);
    CHECK_THROWS_AS(bk_skew(partition({2}), partition({1}), partition({2})),
                    invalid_two_tableau);
    CHECK_THROWS_AS(bk_skew(partition(), partition({1}), partition({2, 2})),
                    invalid_two_tableau);
}

TEST_CASE("bk_skew is an involution producing valid 2-tableaux (5x5 box)") {
    for_each_two_tableau(5, 5, [](const partition& lo, const partition& mid, const partition& hi) {
        partition moved = bk_skew(lo, mid, hi);
        CHECK(is_horizontal_strip(moved, lo));
        CHECK(is_horizontal_strip(hi, moved));
        CHECK(bk_skew(lo, moved, hi) == mid);
    });
}

TEST_CASE("bender_knuth examples") {
    CHECK(bender_knuth(grid({{1, 1, 1}, {2}}, 2), 1) == grid({{1, 2, 2}, {2}}, 2));
    CHECK(bender_knuth(grid({{1, 1}, {2}}, 3), 2) == grid({{1, 1}, {3}}, 3));
    CHECK(bender_knuth(grid({{1, 2}}, 2), 1) == grid({{1, 2}}, 2));
    CHECK_THROWS_AS(bender_knuth(grid({{1, 2}}, 2), 2), index_out_of_range);
    CHECK_THROWS_AS(bender_knuth(grid({{1, 2}}, 2), 0), index_out_of_range);
}

TEST_CASE("bender_knuth matches the classical grid move (3x4 box, n <= 4)") {
    for (int n = 2; n <= 4; ++n)
        for (const partition& shape : partitions_in_box(3, 4))
            for_each_tableau(shape, n, [&](const tableau& T) {
                for (int i = 1; i <= n - 1; ++i) {
                    tableau moved = bender_knuth(T, i);
                    if (T.shape().empty())
                        CHECK(moved == T);
                    else
                        CHECK(moved.to_grid() == oracles::grid_bender_knuth(T.to_grid(), i));
                }
                return true;
            });
}

TEST_CASE("bender_knuth involution, distant commutation, weight swap (3x4 box, n <= 5)") {
    for (int n = 2; n <= 5; ++n)
        for (const partition& shape : partitions_in_box(3, 4))
            for_each_tableau(shape, n, [&](const tableau& T) {
                for (int i = 1; i <= n - 1; ++i) {
                    tableau moved = bender_knuth(T, i);
                    CHECK(bender_knuth(moved, i) == T);
                    std::vector<int> w = T.weight();
                    std::swap(w[static_cast<std::size_t>(i) - 1], w[static_cast<std::size_t>(i)]);
                    CHECK(moved.weight() == w);
                    for (int j = i + 2; j <= n - 1; ++j)
                        CHECK(bender_knuth(moved, j) == bender_knuth(bender_knuth(T, j), i));
                }
                return true;
            });
}

TEST_CASE("promotion_inv") {
    tableau T = grid({{1, 1}, {2}}, 3);
    CHECK(promotion_inv(T, 1) == bender_knuth(T, 1));
    // p_2 = t_1 t_2: frozen from composing the two single moves above
    CHECK(promotion_inv(T, 2) == grid({{2, 2}, {3}}, 3));
    CHECK(promotion_inv(T, 2) == bender_knuth(bender_knuth(T, 2), 1));
    CHECK_THROWS_AS(promotion_inv(T, 3), index_out_of_range);

    for (int n = 2; n <= 4; ++n)
        for (const partition& shape : partitions_in_box(3, 4))
            for_each_tableau(shape, n, [&](const tableau& U) {
                for (int i = 1; i <= n - 1; ++i) {
                    CHECK(promotion(promotion_inv(U, i), i) == U);
                    CHECK(promotion_inv(promotion(U, i), i) == U);
                }
                return true;
            });
}

TEST_CASE("evacuation at small n matches its word forms") {
    for (const partition& shape : partitions_in_box(3, 4)) {
        for_each_tableau(shape, 2, [&](const tableau& T) {
            CHECK(evacuation(T) == bender_knuth(T, 1));
            return true;
        });
        operator_word s3 = operator_word::parse("t1 t2 t1", 3);
        for_each_tableau(shape, 3, [&](const tableau& T) {
            CHECK(evacuation(T) == apply_word(s3, T));
            return true;
        });
    }
}

TEST_CASE("evacuation involution and weight reversal (3x4 box, n <= 4)") {
    for (int n = 1; n <= 4; ++n)
        for (const partition& shape : partitions_in_box(3, 4))
            for_each_tableau(shape, n, [&](const tableau& T) {
                tableau S = evacuation(T);
                CHECK(evacuation(S) == T);
                std::vector<int> w = T.weight();
                std::reverse(w.begin(), w.end());
                CHECK(S.weight() == w);
                CHECK(evacuation_k(T, 1) == T); // S_1 = id
                return true;
            });
}

TEST_CASE("evacuation_k range") {
    tableau T = grid({{1, 2}}, 3);
    CHECK(evacuation_k(T, 3) == evacuation(T));
    CHECK_THROWS_AS(evacuation_k(T, 0), index_out_of_range);
    CHECK_THROWS_AS(evacuation_k(T, 4), index_out_of_range);
}

TEST_CASE("layer involution D") {
    // n=2: D = t_1, n=3: D = t_2
    for (const partition& shape : partitions_in_box(3, 4)) {
        for_each_tableau(shape, 2, [&](const tableau& T) {
            CHECK(d_operator(T) == bender_knuth(T, 1));
            return true;
        });
        for_each_tableau(shape, 3, [&](const tableau& T) {
            CHECK(d_operator(T) == bender_knuth(T, 2));
            return true;
        });
    }
    CHECK(d_operator(grid({{1, 2}}, 2)) == grid({{1, 2}}, 2));
    // involution, and fixedness is per-factor fixedness
    for (int n = 2; n <= 5; ++n)
        for (const partition& shape : partitions_in_box(3, 4))
            for_each_tableau(shape, n, [&](const tableau& T) {
                CHECK(d_operator(d_operator(T)) == T);
                bool per_factor = true;
                for (int i = n - 1; i >= 1; i -= 2)
                    per_factor = per_factor && bender_knuth(T, i) == T;
                CHECK((d_operator(T) == T) == per_factor);
                return true;
            });
}

TEST_CASE("P operator") {
    // n=2: P = p_1 = t_1; n=3: P = p_2
    for (const partition& shape : partitions_in_box(3, 4)) {
        for_each_tableau(shape, 2, [&](const tableau& T) {
            CHECK(p_operator(T) == bender_knuth(T, 1));
            return true;
        });
        for_each_tableau(shape, 3, [&](const tableau& T) {
            CHECK(p_operator(T) == promotion_inv(T, 2));
            return true;
        });
    }
    CHECK(p_operator(grid({{1, 2}}, 2)) == grid({{1, 2}}, 2));
    for (int n = 2; n <= 5; ++n)
        for (const partition& shape : partitions_in_box(3, 4))
            for_each_tableau(shape, n, [&](const tableau& T) {
                CHECK(p_operator_inv(p_operator(T)) == T);
                return true;
            });
}

TEST_CASE("parse_word") {
    operator_word w = operator_word::parse("t1 t2 t1", 3);
    CHECK(w.factors().size() == 3);
    CHECK(w.str() == "t1 t2 t1");

    operator_word pinv = operator_word::parse("p2'", 3);
    REQUIRE(pinv.factors().size() == 1);
    CHECK(pinv.factors()[0] == op_factor{op_kind::p_inv, 2});
    CHECK(pinv.str() == "p2'");

    CHECK(operator_word::parse("", 3).empty());
    CHECK(operator_word::parse("  \t ", 3).empty());
    CHECK(operator_word::parse("S3", 3).factors()[0] == op_factor{op_kind::S_k, 3});
    CHECK(operator_word::parse("P'", 3).factors()[0] == op_factor{op_kind::P_inv, 0});
    CHECK(operator_word::parse("sigma2 tau1 D P S", 6).factors().size() == 5);

    CHECK_THROWS_AS(operator_word::parse("t5", 3), index_out_of_range);
    CHECK_THROWS_AS(operator_word::parse("t0", 3), index_out_of_range);
    CHECK_THROWS_AS(operator_word::parse("S4", 3), index_out_of_range);
    CHECK_THROWS_AS(operator_word::parse("sigma2", 3), index_out_of_range);
    CHECK_THROWS_AS(operator_word::parse("tau1", 3), index_out_of_range);
    try {
        operator_word::parse("t1 wat", 3);
        FAIL("expected word_syntax_error");
    } catch (const word_syntax_error& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(operator_word::parse("D3", 6), word_syntax_error);
    CHECK_THROWS_AS(operator_word::parse("t2'", 6), word_syntax_error);
    CHECK_THROWS_AS(operator_word::parse("S'", 6), word_syntax_error);
    CHECK_THROWS_AS(operator_word::parse("p", 6), word_syntax_error);
}

TEST_CASE("word text round-trips through the parser") {
    int n = 8;
    std::vector<std::string> tokens = {"t3", "p2", "p2'", "s1", "sigma4",
                                       "tau2", "S", "S3", "D", "P", "P'"};
    for (const std::string& tok : tokens) {
        operator_word w = operator_word::parse(tok, n);
        CHECK(w.str() == tok);
        CHECK(operator_word::parse(w.str(), n) == w);
    }
    operator_word big = operator_word::parse("P' tau2 P sigma4 S6 p7' t1", n);
    CHECK(operator_word::parse(big.str(), n) == big);
}

TEST_CASE("apply_word") {
    tableau T = grid({{1, 2}, {3}}, 3);
    CHECK(apply_word(operator_word(), T) == T);
    CHECK(apply_word(operator_word::parse("t1 t1", 3), T) == T);
    CHECK(apply_word(operator_word::parse("S", 3), T) == evacuation(T));
    CHECK(apply_word(operator_word::parse("D", 3), T) == d_operator(T));
    CHECK(apply_word(operator_word::parse("P", 3), T) == p_operator(T));
    CHECK(apply_word(operator_word::parse("P'", 3), T) == p_operator_inv(T));
    CHECK(apply_word(operator_word::parse("p2", 3), T) == promotion_inv(T, 2));
    CHECK(apply_word(operator_word::parse("p2'", 3), T) == promotion(T, 2));
    CHECK(apply_word(operator_word::parse("S2", 3), T) == evacuation_k(T, 2));
    // leftmost factor applied last
    CHECK(apply_word(operator_word::parse("t1 t2", 3), T) ==
          bender_knuth(bender_knuth(T, 2), 1));
    CHECK_THROWS_AS(apply_word(operator_word::parse("t3", 4), T), index_out_of_range);
}

TEST_CASE("P D P' equals S pointwise (3x4 box, n <= 5)") {
    for (int n = 2; n <= 5; ++n) {
        operator_word conj = operator_word::parse("P D P'", n);
        for (const partition& shape : partitions_in_box(3, 4))
            for_each_tableau(shape, n, [&](const tableau& T) {
                CHECK(apply_word(conj, T) == evacuation(T));
                return true;
            });
    }
}

TEST_CASE("s_2 expands to t1 t2 t1 t2 t1") {
    operator_word s2({{op_kind::s, 2}});
    CHECK(expand_to_t_indices(s2, 3) == std::vector<int>{1, 2, 1, 2, 1});
    operator_word word = operator_word::parse("t1 t2 t1 t2 t1", 3);
    for (const partition& shape : partitions_in_box(3, 4))
        for_each_tableau(shape, 3, [&](const tableau& T) {
            CHECK(apply_word(s2, T) == apply_word(word, T));
            return true;
        });
}

TEST_CASE("weight_permutation") {
    int n = 6;
    auto perm_of = [&](const std::string& text) {
        return weight_permutation(operator_word::parse(text, n), n);
    };
    CHECK(perm_of("t1") == std::vector<int>{1, 0, 2, 3, 4, 5});
    CHECK(perm_of("") == std::vector<int>{0, 1, 2, 3, 4, 5});
    // D = t5 t3 t1 swaps each adjacent pair
    CHECK(perm_of("D") == std::vector<int>{1, 0, 3, 2, 5, 4});
    // S reverses
    CHECK(perm_of("S") == std::vector<int>{5, 4, 3, 2, 1, 0});
    // p_2 cycles the first three coordinates
    CHECK(perm_of("p2") == std::vector<int>{1, 2, 0, 3, 4, 5});
    // sigma_i = (i-1,i+1)(i,i+2) on coordinates
    CHECK(perm_of("sigma3") == std::vector<int>{0, 3, 4, 1, 2, 5});

    // weights move by the permutation
    for (const char* text : {"t2", "p3", "p3'", "s2", "sigma2", "tau1", "S", "D", "P"}) {
        operator_word w = operator_word::parse(text, n);
        std::vector<int> perm = weight_permutation(w, n);
        for (const partition& shape : partitions_in_box(2, 3))
            for_each_tableau(shape, n, [&](const tableau& T) {
                std::vector<int> beta = T.weight();
                std::vector<int> moved(beta.size());
                for (int c = 0; c < n; ++c)
                    moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(c)])] =
                        beta[static_cast<std::size_t>(c)];
                CHECK(apply_word(w, T).weight() == moved);
                return true;
            });
    }
}
