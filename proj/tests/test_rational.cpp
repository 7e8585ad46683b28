#include <catch2/catch_amalgamated.hpp>
#include <sympla/rational.hpp>

using namespace sympla;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    Rat q = rat(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(rat(4, 2)) == "2");
}

TEST_CASE("parse_rat accepts p and p/q only") {
    CHECK(parse_rat("5") == rat(5));
    CHECK(parse_rat("-7/14") == rat(-1, 2));
    CHECK(parse_rat("0") == 0);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
}

TEST_CASE("field arithmetic is exact") {
    Rat third = rat(1, 3);
    CHECK(third + third + third == 1);
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(sign(rat(-5, 7)) == -1);
    CHECK(sign(Rat(0)) == 0);
}

TEST_CASE("parse round-trips through to_string") {
    for (long n = -12; n <= 12; ++n)
        for (long d = 1; d <= 9; ++d) {
            Rat q = rat(n, d);
            CHECK(parse_rat(to_string(q)) == q);
        }
}
