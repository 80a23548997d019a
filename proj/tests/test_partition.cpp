#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "petrie/partition.hpp"

using namespace petrie;

namespace {

// Euler's pentagonal recurrence, independent of the enumerator.
long long partition_count(int n) {
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > m) break;
            const long long sign = j % 2 ? 1 : -1;
            p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g2)];
        }
    }
    return p[static_cast<std::size_t>(n)];
}

// Components by flood fill over edge-adjacent cells.
std::vector<std::set<Cell>> flood_components(const SkewShape& s) {
    std::set<Cell> remaining;
    for (const Cell& c : s.cells()) remaining.insert(c);
    std::vector<std::set<Cell>> out;
    while (!remaining.empty()) {
        std::set<Cell> comp;
        std::vector<Cell> stack{*remaining.begin()};
        remaining.erase(remaining.begin());
        while (!stack.empty()) {
            const Cell c = stack.back();
            stack.pop_back();
            comp.insert(c);
            for (Cell d : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1},
                           Cell{c.row, c.col + 1}}) {
                if (auto it = remaining.find(d); it != remaining.end()) {
                    remaining.erase(it);
                    stack.push_back(d);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool columns_distinct(const SkewShape& s) {
    std::set<int> cols;
    for (const Cell& c : s.cells())
        if (!cols.insert(c.col).second) return false;
    return true;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> all;
    for (int m = 0; m <= n; ++m)
        for (auto& p : enumerate_partitions(m)) all.push_back(p);
    return all;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("construction validates and normalizes") {
    CHECK(Partition(std::vector<int>{3, 1, 0, 0}) == Partition{3, 1});
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), std::invalid_argument);
    const Partition p{4, 2, 2};
    CHECK(p.size() == 8);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 4);
    CHECK(p.part(0) == 0);
    CHECK(p.part(7) == 0);
}

TEST_CASE("conjugate") {
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{5}.conjugate() == Partition{1, 1, 1, 1, 1});
    for (const Partition& p : partitions_up_to(9)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().size() == p.size());
    }
}

TEST_CASE("containment") {
    CHECK(contains(Partition{1}, Partition{2, 1}));
    CHECK_FALSE(contains(Partition{2, 2}, Partition{3, 1}));
    for (const Partition& p : partitions_up_to(5)) CHECK(contains(Partition{}, p));
    CHECK_THROWS_AS(SkewShape(Partition{3, 1}, Partition{2, 2}), std::invalid_argument);
}

TEST_CASE("strips") {
    CHECK(is_horizontal_strip(SkewShape({3, 1}, {2})));
    CHECK_FALSE(is_horizontal_strip(SkewShape({2, 2}, {1})));
    CHECK(is_horizontal_strip(SkewShape({3, 2}, {3, 2})));
    CHECK_FALSE(is_vertical_strip(SkewShape({2, 2}, {1})));
    CHECK(is_vertical_strip(SkewShape({1, 1})));
    CHECK(is_vertical_strip(SkewShape({4, 1}, {4, 1})));

    for (const Partition& lambda : partitions_up_to(7))
        for (const Partition& mu : enumerate_subpartitions(lambda)) {
            const SkewShape s(lambda, mu);
            CHECK(is_horizontal_strip(s) == columns_distinct(s));
            CHECK(is_vertical_strip(s) == columns_distinct(s.conjugate()));
        }
}

TEST_CASE("connected components") {
    const auto corner = connected_components(SkewShape({2, 1}, {1}));
    REQUIRE(corner.size() == 2);
    CHECK(corner[0].size() == 1);
    CHECK(corner[1].size() == 1);
    CHECK(connected_components(SkewShape({9, 8, 6, 5, 3, 2}, {7, 6, 4, 3, 1})).size() == 3);
    CHECK(is_connected(SkewShape({2, 2}, {1})));

    SUBCASE("agree with flood fill") {
        for (const Partition& lambda : partitions_up_to(8))
            for (const Partition& mu : enumerate_subpartitions(lambda)) {
                const SkewShape s(lambda, mu);
                std::vector<std::set<Cell>> mine;
                for (const SkewShape& c : connected_components(s)) {
                    const auto cells = c.cells();
                    mine.emplace_back(cells.begin(), cells.end());
                }
                std::sort(mine.begin(), mine.end());
                CHECK(mine == flood_components(s));
            }
    }
}

TEST_CASE("normalized drops empty rows and shifts left") {
    CHECK(SkewShape({5, 4}, {3, 2}).normalized() == SkewShape({3, 2}, {1}));
    CHECK(SkewShape({3, 3, 2}, {3, 3, 1}).normalized() == SkewShape({1}));
    const SkewShape s({6, 5, 2}, {5, 3});
    CHECK(s.normalized() == s);
}

TEST_CASE("enumerate_partitions") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(3, 2) == std::vector<Partition>{{2, 1}, {1, 1, 1}});
    CHECK(enumerate_partitions(6).size() == 11);
    for (int n = 0; n <= 15; ++n)
        CHECK(static_cast<long long>(enumerate_partitions(n).size()) == partition_count(n));
    const auto list = enumerate_partitions(8);
    CHECK(std::is_sorted(list.begin(), list.end(), DecreasingLex{}));
}

TEST_CASE("horizontal strip extensions") {
    CHECK(horizontal_strip_extensions({2}, {2}, 0) == std::vector<Partition>{{2}});
    CHECK(horizontal_strip_extensions({1}, {2, 2}, 1) == std::vector<Partition>{{2}, {1, 1}});
    CHECK(horizontal_strip_extensions({}, {1, 1}, 2).empty());

    SUBCASE("match a brute-force filter") {
        for (const Partition& lambda : partitions_up_to(7))
            for (const Partition& mu : enumerate_subpartitions(lambda))
                for (int n = 0; n <= lambda.size() - mu.size(); ++n) {
                    std::vector<Partition> expected;
                    for (const Partition& nu : enumerate_subpartitions(lambda))
                        if (nu.size() == mu.size() + n && contains(mu, nu) && columns_distinct(SkewShape(nu, mu)))
                            expected.push_back(nu);
                    auto got = horizontal_strip_extensions(mu, lambda, n);
                    std::sort(got.begin(), got.end());
                    std::sort(expected.begin(), expected.end());
                    CHECK(got == expected);
                }
    }
}

TEST_CASE("add_boxes respects the row bound") {
    const auto grown = add_boxes({2, 1}, 3, 2);
    for (const Partition& p : grown) {
        CHECK(p.size() == 6);
        CHECK(SkewShape(p, {2, 1}).longest_row() <= 2);
    }
    CHECK(add_boxes({}, 4).size() == 5);
    CHECK(add_boxes({}, 4, 1) == std::vector<Partition>{{1, 1, 1, 1}});
}

TEST_CASE("dominance") {
    CHECK(dominance_leq({1, 1, 1}, {2, 1}));
    CHECK_FALSE(dominance_leq({2, 1}, {1, 1, 1}));
    for (const Partition& p : partitions_up_to(6)) CHECK(dominance_leq(p, p));
    CHECK_FALSE(dominance_leq({3, 3}, {4, 1, 1}));
    CHECK_FALSE(dominance_leq({4, 1, 1}, {3, 3}));
}

TEST_CASE("text form") {
    CHECK(to_string(Partition{5, 3, 1}) == "5,3,1");
    CHECK(to_string(Partition{}) == "-");
    CHECK(parse_partition("5,3,1") == Partition{5, 3, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("-") == Partition{});
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
    for (const Partition& p : partitions_up_to(6)) CHECK(parse_partition(to_string(p)) == p);
}

TEST_CASE("render") {
    CHECK(render(SkewShape({3, 1}, {1})) == ".##\n#\n");
}

}  // TEST_SUITE
