#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pentacc/rational.hpp"

using namespace pentacc;

TEST_CASE("make_rational canonicalizes") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-2, 4) == make_rational(1, -2));
    CHECK(make_rational(0, 7) == 0);
    // canonical form has a positive denominator
    CHECK(make_rational(1, -3).get_den() == 3);
    CHECK(make_rational(1, -3).get_num() == -1);
    CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("sign") {
    CHECK(sign(make_rational(3, 7)) == 1);
    CHECK(sign(make_rational(-3, 7)) == -1);
    CHECK(sign(Rational(0)) == 0);
    CHECK(sign(Integer(-12)) == -1);
}

TEST_CASE("floor/ceil division and conversion") {
    CHECK(floor_div(Integer(7), Integer(2)) == 3);
    CHECK(floor_div(Integer(-7), Integer(2)) == -4);
    CHECK(ceil_div(Integer(7), Integer(2)) == 4);
    CHECK(ceil_div(Integer(-7), Integer(2)) == -3);
    CHECK(floor_to_integer(make_rational(-1, 2)) == -1);
    CHECK(ceil_to_integer(make_rational(-1, 2)) == 0);
    CHECK(floor_to_integer(Rational(5)) == 5);
    CHECK(ceil_to_integer(Rational(5)) == 5);
}

TEST_CASE("integer square roots") {
    CHECK(floor_sqrt(Integer(0)) == 0);
    CHECK(floor_sqrt(Integer(35)) == 5);
    CHECK(floor_sqrt(Integer(36)) == 6);
    CHECK(ceil_sqrt(Integer(35)) == 6);
    CHECK(ceil_sqrt(Integer(36)) == 6);
    // fuzz: floor_sqrt(n)^2 <= n < (floor_sqrt(n)+1)^2
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        Integer n(static_cast<unsigned long>(rng() % 1000000));
        Integer r = floor_sqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

TEST_CASE("powers") {
    CHECK(pow_int(Integer(3), 4) == 81);
    CHECK(pow_int(Integer(-2), 3) == -8);
    CHECK(pow_rational(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(pow_rational(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(pow_rational(make_rational(5, 7), 0) == 1);
    CHECK_THROWS_AS(pow_rational(Rational(0), -1), Error);
}

TEST_CASE("parse / to_string round trip") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("6/8") == make_rational(3, 4));
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const long n = static_cast<long>(rng() % 20001) - 10000;
        const long d = static_cast<long>(rng() % 999) + 1;
        const Rational q = make_rational(n, d);
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("decimal rendering with directed rounding") {
    CHECK(decimal_floor(make_rational(1, 3), 4) == "0.3333");
    CHECK(decimal_ceil(make_rational(1, 3), 4) == "0.3334");
    CHECK(decimal_floor(make_rational(1, 4), 2) == "0.25");
    CHECK(decimal_ceil(make_rational(1, 4), 2) == "0.25");
    CHECK(decimal_floor(make_rational(-1, 3), 3) == "-0.334");
    CHECK(decimal_ceil(make_rational(-1, 3), 3) == "-0.333");
    CHECK(decimal_floor(make_rational(12345, 10), 1) == "1234.5");
    // floor <= value <= ceil always
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        const long n = static_cast<long>(rng() % 20001) - 10000;
        const long d = static_cast<long>(rng() % 999) + 1;
        const Rational q = make_rational(n, d);
        const Rational lo = parse_rational([&] {
            std::string s = decimal_floor(q, 6);
            // rewrite 12.5 as 125/10 by stripping the point
            const auto dot = s.find('.');
            return s.substr(0, dot) + s.substr(dot + 1) + "/1000000";
        }());
        CHECK(lo <= q);
    }
}
