#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "domtab/partition.hpp"
#include "oracles.hpp"

using namespace domtab;

namespace {
long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}
} // namespace

TEST_CASE("partition normalization and validation") {
    CHECK(partition({3, 1, 0, 0}) == partition({3, 1}));
    CHECK(partition(std::vector<int>{}) == partition());
    CHECK(partition({2, 2}).cells() == 4);
    CHECK(partition({3, 1}).part(1) == 3);
    CHECK(partition({3, 1}).part(2) == 1);
    CHECK(partition({3, 1}).part(3) == 0);
    CHECK(partition({3, 1}).rows() == 2);
    CHECK(partition().empty());
    CHECK_THROWS_AS(partition({1, 2}), error);
    CHECK_THROWS_AS(partition({2, -1}), error);
}

TEST_CASE("contains") {
    CHECK(contains(partition(), partition({3, 1})));
    CHECK_FALSE(contains(partition({2, 2}), partition({3, 1})));
    CHECK(contains(partition({2, 1}), partition({3, 1})));
}

TEST_CASE("horizontal strip examples") {
    CHECK(is_horizontal_strip(partition({3, 1}), partition({2})));
    CHECK_FALSE(is_horizontal_strip(partition({2, 2}), partition({1})));
    CHECK(is_horizontal_strip(partition({2}), partition({2})));
}

TEST_CASE("horizontal strip agrees with the column-count rule on a 5x5 box") {
    std::vector<partition> all = partitions_in_box(5, 5);
    for (const partition& outer : all)
        for (const partition& inner : all)
            CHECK(is_horizontal_strip(outer, inner) ==
                  oracles::hstrip_by_column_scan(outer, inner));
}

TEST_CASE("skew_cells") {
    skew_shape s(partition({3, 1}), partition({2}));
    CHECK(skew_cells(s) == std::vector<cell>{{1, 3}, {2, 1}});
    skew_shape empty(partition({2, 1}), partition({2, 1}));
    CHECK(skew_cells(empty).empty());
    skew_shape full(partition({2, 2}), partition());
    CHECK(skew_cells(full) == std::vector<cell>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    CHECK_THROWS_AS(skew_shape(partition({1}), partition({2})), error);
}

TEST_CASE("free_row_segment examples") {
    skew_shape hook(partition({3, 1}), partition());
    CHECK(free_row_segment(hook, 1) == col_range{2, 3});
    skew_shape block(partition({2, 2}), partition());
    CHECK(free_row_segment(block, 1).empty());
    skew_shape row(partition({2}), partition());
    CHECK(free_row_segment(row, 1) == col_range{1, 2});
}

TEST_CASE("free_row_segment equals the naive neighbor scan on a 6x6 box") {
    std::vector<partition> all = partitions_in_box(6, 6);
    for (const partition& outer : all)
        for (const partition& inner : all) {
            if (!contains(inner, outer))
                continue;
            skew_shape s(outer, inner);
            for (int row = 1; row <= outer.rows() + 1; ++row) {
                std::vector<int> expected = oracles::naive_free_cols(s, row);
                col_range seg = free_row_segment(s, row);
                std::vector<int> got;
                for (int c = seg.first; c <= seg.last; ++c)
                    got.push_back(c);
                CHECK(got == expected); // also certifies the interval postcondition
            }
        }
}

TEST_CASE("partitions_in_box count and order") {
    CHECK(partitions_in_box(0, 5) == std::vector<partition>{partition()});
    CHECK(partitions_in_box(1, 2) ==
          std::vector<partition>{partition(), partition({1}), partition({2})});
    CHECK(partitions_in_box(2, 2) ==
          std::vector<partition>{partition(), partition({1}), partition({2}),
                                 partition({1, 1}), partition({2, 1}), partition({2, 2})});
    for (int r = 0; r <= 5; ++r)
        for (int c = 0; c <= 5; ++c) {
            std::vector<partition> all = partitions_in_box(r, c);
            CHECK(static_cast<long long>(all.size()) == binom(r + c, r));
            std::set<partition> unique(all.begin(), all.end());
            CHECK(unique.size() == all.size());
        }
}
