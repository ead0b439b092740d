#include "doctest.h"

#include <set>

#include "prymbn/shifted_tableaux.hpp"
#include "prymbn/strict_partition.hpp"

using prymbn::Cell;
using prymbn::Int;
using prymbn::ShiftedTableau;
using prymbn::StrictPartition;

TEST_SUITE("partitions") {

TEST_CASE("strict partition validation") {
    CHECK(StrictPartition({4, 2, 1}).weight() == 7);
    CHECK(StrictPartition({4, 2, 1}).length() == 3);
    CHECK(StrictPartition().empty());
    CHECK_THROWS_AS(StrictPartition({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(StrictPartition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(StrictPartition({0}), std::invalid_argument);
    CHECK_THROWS_AS(StrictPartition({3, -1}), std::invalid_argument);
}

TEST_CASE("parse and canonical string") {
    CHECK(StrictPartition::parse("4,2,1").parts() == std::vector<int>{4, 2, 1});
    CHECK(StrictPartition::parse("").empty());
    CHECK(StrictPartition({4, 2, 1}).str() == "4,2,1");
    CHECK(StrictPartition().str() == "");
    CHECK_THROWS_AS(StrictPartition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(StrictPartition::parse("a,b"), std::invalid_argument);
}

TEST_CASE("shifted diagram layout") {
    auto cells = prymbn::shifted_diagram(StrictPartition({4, 2, 1}));
    CHECK(cells.size() == 7);
    // Row 2 starts at column 2, row 3 at column 3.
    CHECK(cells == std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 3}});

    CHECK(prymbn::shifted_diagram(StrictPartition()).empty());
    CHECK(prymbn::shifted_diagram(StrictPartition({3})) ==
          std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("strict partition generation") {
    CHECK(prymbn::strict_partitions_of_weight(0).size() == 1);  // the empty partition
    CHECK(prymbn::strict_partitions_of_weight(5).size() == 3);  // (5), (4,1), (3,2)
    CHECK(prymbn::strict_partitions_of_weight(12).size() == 15);
    CHECK(prymbn::strict_partitions_up_to(12).size() == 70);
}

}  // TEST_SUITE

TEST_SUITE("shifted_tableaux") {

TEST_CASE("tableau validation") {
    CHECK_NOTHROW(ShiftedTableau(StrictPartition({4, 2, 1}), {{1, 2, 4, 6}, {3, 5}, {7}}));
    // [1,3]/[2] breaks the column condition at cell (2,2).
    CHECK_THROWS_AS(ShiftedTableau(StrictPartition({2, 1}), {{1, 3}, {2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ShiftedTableau(StrictPartition({2, 1}), {{1, 2}, {2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ShiftedTableau(StrictPartition({2, 1}), {{2, 1}, {3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ShiftedTableau(StrictPartition({2, 1}), {{1, 2}}), std::invalid_argument);

    ShiftedTableau t(StrictPartition({4, 2, 1}), {{1, 2, 4, 6}, {3, 5}, {7}});
    CHECK(t.entry(1, 1) == 1);
    CHECK(t.entry(2, 3) == 5);
    CHECK(t.entry(3, 3) == 7);
    CHECK_THROWS_AS(t.entry(2, 1), std::out_of_range);
}

TEST_CASE("enumeration: (2,1) has exactly one standard filling") {
    auto all = prymbn::enumerate_sst(StrictPartition({2, 1}));
    REQUIRE(all.size() == 1);
    CHECK(all[0].rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("enumeration: single rows and the empty shape are forced") {
    CHECK(prymbn::count_sst_bruteforce(StrictPartition({5})) == 1);
    CHECK(prymbn::count_sst_bruteforce(StrictPartition({1})) == 1);
    CHECK(prymbn::count_sst_bruteforce(StrictPartition()) == 1);
}

TEST_CASE("enumeration: shape (4,2,1) yields 7 tableaux and contains the marked filling") {
    auto all = prymbn::enumerate_sst(StrictPartition({4, 2, 1}));
    CHECK(all.size() == 7);
    ShiftedTableau expected(StrictPartition({4, 2, 1}), {{1, 2, 4, 6}, {3, 5}, {7}});
    bool found = false;
    for (const auto& t : all) found = found || t == expected;
    CHECK(found);
}

TEST_CASE("enumeration invariants: validity, no duplicates, deterministic order") {
    for (int w = 0; w <= 8; ++w) {
        for (const auto& shape : prymbn::strict_partitions_of_weight(w)) {
            std::set<std::string> seen;
            long count = 0;
            // The ShiftedTableau constructor revalidates every yield.
            prymbn::for_each_sst(shape, [&](const ShiftedTableau& t) {
                ++count;
                CHECK(t.shape() == shape);
                seen.insert(t.str());
            });
            CHECK(static_cast<long>(seen.size()) == count);
            auto again = prymbn::enumerate_sst(shape);
            CHECK(static_cast<long>(again.size()) == count);
        }
    }
}

TEST_CASE("closed formula against the enumeration oracle") {
    CHECK(prymbn::count_sst_formula(StrictPartition({4, 2, 1})) == 7);
    CHECK(prymbn::count_sst_formula(StrictPartition({2, 1})) == 1);
    CHECK(prymbn::count_sst_formula(StrictPartition({3, 1})) == 2);
    CHECK(prymbn::count_sst_formula(StrictPartition()) == 1);

    for (int w = 0; w <= 10; ++w) {
        for (const auto& shape : prymbn::strict_partitions_of_weight(w)) {
            CHECK(prymbn::count_sst_formula(shape) == prymbn::count_sst_bruteforce(shape));
        }
    }
}

TEST_CASE("marked tableaux with unmarked diagonal") {
    CHECK(prymbn::count_marked_unmarked_diagonal(StrictPartition({2, 1})) == 2);
    CHECK(prymbn::count_marked_unmarked_diagonal(StrictPartition({1})) == 1);
    CHECK(prymbn::count_marked_unmarked_diagonal(StrictPartition({4, 2, 1})) == 112);
}

TEST_CASE("enumeration bound is enforced") {
    StrictPartition big({9, 8});  // 17 cells
    CHECK_THROWS_WITH_AS(prymbn::count_sst_bruteforce(big),
                         doctest::Contains("enumeration bound"), std::invalid_argument);
    CHECK(prymbn::count_sst_bruteforce(big, 20) > 0);
    CHECK_THROWS_AS(prymbn::count_sst_bruteforce(StrictPartition({1}), 0),
                    std::invalid_argument);
}

TEST_CASE("rendering uses the shifted layout") {
    ShiftedTableau fig(StrictPartition({4, 2, 1}), {{1, 2, 4, 6}, {3, 5}, {7}});
    CHECK(prymbn::render_tableau(fig) == "1 2 4 6\n  3 5\n    7");

    ShiftedTableau one(StrictPartition({1}), {{1}});
    CHECK(prymbn::render_tableau(one) == "1");

    ShiftedTableau t31(StrictPartition({3, 1}), {{1, 2, 3}, {4}});
    CHECK(prymbn::render_tableau(t31) == "1 2 3\n  4");
}

TEST_CASE("rendering right-aligns multi-digit entries") {
    auto all = prymbn::enumerate_sst(StrictPartition({6, 4}));  // 10 cells
    REQUIRE(!all.empty());
    std::string grid = prymbn::render_tableau(all.front());
    CHECK(grid == " 1  2  3  4  5  6\n    7  8  9 10");
}

}  // TEST_SUITE

TEST_SUITE("staircase") {

TEST_CASE("small staircase counts, both routes") {
    CHECK(prymbn::count_syt_staircase(1) == 1);
    CHECK(prymbn::count_syt_staircase(2) == 2);
    CHECK(prymbn::count_syt_staircase_bruteforce(2) == 2);
    CHECK(prymbn::count_syt_staircase_formula(2) == 2);
    CHECK(prymbn::count_syt_staircase(4) == 768);
}

TEST_CASE("r = 2 enumerates the two fillings by hand") {
    std::vector<prymbn::StaircaseTableau> all;
    prymbn::for_each_staircase_syt(2, [&](const prymbn::StaircaseTableau& t) {
        all.push_back(t);
    });
    REQUIRE(all.size() == 2);
    CHECK(all[0].rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(all[1].rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
}

TEST_CASE("formula path has no bound; combined path refuses past the bound") {
    CHECK(prymbn::count_syt_staircase_formula(5) == 292864);
    CHECK(prymbn::count_syt_staircase_formula(7) == Int("48608795688960"));
    CHECK_THROWS_AS(prymbn::count_syt_staircase(6), std::invalid_argument);  // 21 cells
}

TEST_CASE("staircase validation") {
    CHECK_NOTHROW(prymbn::StaircaseTableau(2, {{1, 3}, {2}}));
    CHECK_THROWS_AS(prymbn::StaircaseTableau(2, {{1, 2}, {4}}), std::invalid_argument);
    CHECK_THROWS_AS(prymbn::StaircaseTableau(2, {{2, 3}, {1}}), std::invalid_argument);
}

}  // TEST_SUITE
