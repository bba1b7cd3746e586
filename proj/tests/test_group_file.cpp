#include <doctest.h>

#include "altsym/group_file.hpp"

using namespace altsym;

TEST_CASE("generator file parsing") {
    auto g = parse_generator_text(
        "# symmetric group on 5 points\n"
        "degree 5\n"
        "(1,2)\n"
        "\n"
        "[2,3,4,5,1]\n");
    CHECK(g.degree == 5);
    REQUIRE(g.generators.size() == 2);
    CHECK(g.generators[0] == parse_permutation("(1,2)", 5));
    CHECK(g.generators[1] == parse_permutation("(1,2,3,4,5)", 5));
}

TEST_CASE("generator file errors") {
    CHECK_THROWS_AS(parse_generator_text("(1,2)\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator_text("degree 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator_text("degree 0\n(1,2)\n"),
                    std::invalid_argument);
    // Point beyond the declared degree.
    CHECK_THROWS_AS(parse_generator_text("degree 5\n(1,7)\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_generator_text("degree 5\n(1,1)\n"),
                    std::invalid_argument);
}
