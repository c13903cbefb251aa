#include <doctest.h>

#include "burge/pvfree.hpp"

using namespace burge;

TEST_CASE("peak detection") {
    auto peak = find_peak(BurgeArray::from_rows({2, 4, 4}, {1, 3, 2}));
    REQUIRE(peak.has_value());
    CHECK(*peak == IndexTriple{1, 2, 3});
    // The third bottom entry also exceeds the last one, but j must be minimal
    // for its (i, k) pair and the minimal j fails the top-row bound.
    CHECK_FALSE(find_peak(BurgeArray::from_rows({4, 5, 6, 7}, {1, 3, 5, 2})));
    CHECK(find_peak(BurgeArray::from_rows({2, 3, 3, 4}, {1, 2, 1, 2})).has_value());
}

TEST_CASE("valley detection") {
    CHECK_FALSE(find_valley(BurgeArray::from_rows({2, 4, 4}, {1, 3, 2})));
    CHECK_FALSE(find_valley(BurgeArray::from_rows({4, 5, 6, 7}, {1, 3, 5, 2})));
    auto valley = find_valley(BurgeArray::from_rows({2, 3, 3, 4}, {1, 2, 1, 2}));
    REQUIRE(valley.has_value());
    CHECK(*valley == IndexTriple{2, 3, 4});
}

TEST_CASE("PV-freeness") {
    CHECK(is_pv_free(BurgeArray::from_rows({4, 5, 6, 7}, {1, 3, 5, 2})));
    CHECK(is_pv_free(BurgeArray()));
    CHECK(is_pv_free(BurgeArray::from_rows({4, 8, 9, 9}, {1, 3, 5, 2})));
}

TEST_CASE("hook graphs") {
    CHECK(is_hook_graph(star(4, 1)));
    CHECK_FALSE(is_hook_graph(SimpleGraph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}})));
    CHECK_FALSE(is_hook_graph(from_burge_array(BurgeArray::from_rows({2, 4, 4}, {1, 3, 2}), 4)));
}

TEST_CASE("hook shape equivalence over all graphs on up to five vertices") {
    for (int n = 1; n <= 5; ++n)
        for (const SimpleGraph& g : GraphEnumeration(n))
            CHECK(is_pv_free(to_burge_array(g)) == is_hook(shape_of_graph(g)));
}

TEST_CASE("longest PV-free subsequence") {
    BurgeArray a = BurgeArray::from_rows({4, 8, 8, 9, 9}, {1, 3, 2, 5, 2});
    CHECK(longest_pv_free_subarray(a) == 4);
    CHECK(longest_pv_free_subarray(BurgeArray()) == 0);
    CHECK(longest_pv_free_subarray(BurgeArray::from_rows({4, 5, 6, 7}, {1, 3, 5, 2})) == 4);
    CHECK(is_pv_free(subarray(a, {0, 1, 3, 4})));
    CHECK(encode(subarray(a, {0, 1, 3, 4})).shape() == Partition({4, 1, 1, 1, 1}));
}

TEST_CASE("subarray selection") {
    BurgeArray a = BurgeArray::from_rows({2, 3, 3, 4}, {1, 2, 1, 2});
    BurgeArray s = subarray(a, {0, 2});
    CHECK(s.top() == std::vector<int>{2, 3});
    CHECK(s.bottom() == std::vector<int>{1, 1});
    CHECK_THROWS_AS(subarray(a, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(subarray(a, {4}), std::invalid_argument);
}

TEST_CASE("column deletion preserves the array invariants") {
    for (int n = 1; n <= 4; ++n)
        for (const SimpleGraph& g : GraphEnumeration(n)) {
            BurgeArray a = to_burge_array(g);
            int r = a.columns();
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
                std::vector<int> cols;
                for (int k = 0; k < r; ++k)
                    if (mask & (std::uint32_t{1} << k))
                        cols.push_back(k);
                CHECK_NOTHROW(subarray(a, cols));
            }
        }
}

TEST_CASE("PV-freeness is not monotone under column deletion") {
    // Deleting the column that carried the minimal j for a candidate (i, k)
    // pair can promote a later column into the minimal slot and create a
    // peak. Peak minimality is always re-derived inside the subsequence.
    BurgeArray a = BurgeArray::from_rows({3, 4, 5, 5}, {1, 2, 3, 1});
    CHECK(is_pv_free(a));
    BurgeArray s = subarray(a, {0, 2, 3});
    auto peak = find_peak(s);
    REQUIRE(peak.has_value());
    CHECK(*peak == IndexTriple{1, 2, 3});
    // The subsequence is an array in its own right and obeys the hook rule.
    CHECK_FALSE(is_hook(encode(s).shape()));
}
