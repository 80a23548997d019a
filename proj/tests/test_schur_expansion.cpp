#include <doctest.h>

#include "petrie/schur_expansion.hpp"

using namespace petrie;

TEST_SUITE("schur expansion") {

TEST_CASE("terms stay homogeneous and nonzero") {
    SchurExpansion e;
    e.add({2, 1}, 3);
    e.add({1, 1, 1}, -1);
    e.add({2, 1}, -3);
    CHECK(e.size() == 1);
    CHECK(e.coefficient({2, 1}) == 0);
    CHECK(e.coefficient({1, 1, 1}) == -1);
    CHECK(e.degree() == 3);
    CHECK_THROWS_AS(e.add({2}, 1), std::invalid_argument);
    CHECK_FALSE(SchurExpansion{}.degree().has_value());
}

TEST_CASE("canonical text") {
    SchurExpansion e;
    e.add({1, 1, 1}, -1);
    e.add({3}, 2);
    e.add({2, 1}, 1);
    CHECK(to_text(e) == "+2*s[3] +1*s[2,1] -1*s[1,1,1]");
    CHECK(to_text(SchurExpansion{}) == "0");
    CHECK(parse_expansion_text(to_text(e)) == e);
    CHECK(parse_expansion_text("0").empty());
    CHECK_THROWS_AS(parse_expansion_text("+1*s[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expansion_text("s[2]"), std::invalid_argument);

    SchurExpansion unit;
    unit.add({}, 1);
    CHECK(parse_expansion_text(to_text(unit)) == unit);
}

TEST_CASE("json round trip") {
    SchurExpansion e;
    e.add({3, 1}, 1);
    e.add({2, 2}, 1);
    e.add({1, 1, 1, 1}, -1);
    const std::string json = to_json(e);
    CHECK(json == R"({"terms":[{"lambda":[3,1],"coeff":1},{"lambda":[2,2],"coeff":1},{"lambda":[1,1,1,1],"coeff":-1}]})");
    CHECK(expansion_from_json(json) == e);
    CHECK_THROWS_AS(expansion_from_json("{\"terms\":[{\"lambda\":[1]}]}"), std::invalid_argument);
    CHECK_THROWS_AS(expansion_from_json("not json"), std::invalid_argument);
}

TEST_CASE("straightening") {
    CHECK(straighten({2, 1}) == std::pair{Partition{2, 1}, 1});
    CHECK(straighten({1, 2}) == std::nullopt);
    CHECK(straighten({0, 2}) == std::pair{Partition{1, 1}, -1});
    CHECK(straighten({1, 3}) == std::pair{Partition{2, 2}, -1});
    CHECK(straighten({2, 1, 0}) == std::pair{Partition{2, 1}, 1});
    CHECK(straighten({0, 0, 3}) == std::pair{Partition{1, 1, 1}, 1});
}

}  // TEST_SUITE
