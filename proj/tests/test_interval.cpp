#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "pentacc/interval.hpp"

using namespace pentacc;

namespace {

std::mt19937_64 rng(20240915);

Rational rand_rat(long span = 1000) {
    const long n = static_cast<long>(rng() % (2 * span + 1)) - span;
    const long d = static_cast<long>(rng() % 97) + 1;
    return make_rational(n, d);
}

Interval rand_interval() {
    Rational a = rand_rat(), b = rand_rat();
    if (a > b) std::swap(a, b);
    return {a, b};
}

Rational point_inside(const Interval& v) {
    const long k = static_cast<long>(rng() % 17);
    return v.lo + v.width() * make_rational(k, 16);
}

// independent enclosure of sqrt(q) by sign bisection on x^2 - q
Interval bisect_sqrt(const Rational& q, int steps = 60) {
    Rational lo(0), hi = q < 1 ? Rational(1) : q;
    for (int i = 0; i < steps; ++i) {
        const Rational mid = (lo + hi) / 2;
        (mid * mid <= q ? lo : hi) = mid;
    }
    return {lo, hi};
}

}  // namespace

TEST_CASE("interval construction and queries") {
    CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), Error);
    const Interval v(make_rational(1, 3), make_rational(2, 3));
    CHECK(v.width() == make_rational(1, 3));
    CHECK(v.midpoint() == make_rational(1, 2));
    CHECK(v.contains(make_rational(1, 2)));
    CHECK_FALSE(v.contains(Rational(1)));
    CHECK_FALSE(v.contains_zero());
    CHECK(Interval(Rational(-1), Rational(1)).contains_zero());
    CHECK(Interval(Rational(-2), Rational(-1)).certain_sign() == -1);
    CHECK(Interval(Rational(1), Rational(2)).certain_sign() == 1);
    CHECK(Interval(Rational(0), Rational(2)).certain_sign() == 0);
}

TEST_CASE("arithmetic examples") {
    const Interval a(Rational(1), Rational(2)), b(Rational(3), Rational(4));
    const Interval s = a + b;
    CHECK(s.lo == 4);
    CHECK(s.hi == 6);
    const Interval m = Interval(Rational(-1), Rational(2)) * b;
    CHECK(m.lo == -4);
    CHECK(m.hi == 8);
    const Interval p = int_pow(
        Interval(make_rational(1871, 10000), make_rational(1872, 10000)), 2);
    CHECK(p.lo == make_rational(3500641, 100000000));
    CHECK(p.hi == make_rational(3504384, 100000000));
    CHECK_THROWS_AS(a / Interval(Rational(-1), Rational(1)),
                    DivisionByIntervalContainingZero);
    // negative even power straddling zero
    const Interval e = int_pow(Interval(Rational(-2), Rational(1)), 2);
    CHECK(e.lo == 0);
    CHECK(e.hi == 4);
    const Interval inv = int_pow(Interval(Rational(2), Rational(4)), -1);
    CHECK(inv.lo == make_rational(1, 4));
    CHECK(inv.hi == make_rational(1, 2));
}

TEST_CASE("hull and intersects") {
    const Interval a(Rational(0), Rational(1)), b(Rational(2), Rational(3));
    CHECK_FALSE(intersects(a, b));
    CHECK(intersects(a, Interval(Rational(1), Rational(2))));
    const Interval h = hull(a, b);
    CHECK(h.lo == 0);
    CHECK(h.hi == 3);
}

TEST_CASE("interval_sqrt examples") {
    const Interval s = interval_sqrt(Interval(Rational(4), Rational(9)), make_rational(1, 10));
    CHECK(s.contains(Rational(2)));
    CHECK(s.contains(Rational(3)));
    CHECK(s.lo <= 2);
    CHECK(s.hi >= 3);

    const Rational w3 = make_rational(1, 1000);
    const Interval r2 = interval_sqrt(Interval(Rational(2)), w3);
    CHECK(r2.width() <= w3);
    CHECK(r2.contains(bisect_sqrt(Rational(2))));

    // Phi(1/2) = sqrt((15-1)/(1+1)) = sqrt(7)
    const Rational w6 = make_rational(1, 1000000);
    const Interval r7 = interval_sqrt(Interval(Rational(7)), w6);
    CHECK(r7.width() <= w6);
    CHECK(r7.contains(bisect_sqrt(Rational(7))));

    CHECK_THROWS_AS(interval_sqrt(Interval(Rational(-1), Rational(1)), w3),
                    NegativeRadicand);
}

TEST_CASE("soundness fuzz: image points stay inside") {
    for (int i = 0; i < 10000; ++i) {
        const Interval a = rand_interval(), b = rand_interval();
        const Rational x = point_inside(a), y = point_inside(b);
        CHECK((a + b).contains(x + y));
        CHECK((a - b).contains(x - y));
        CHECK((a * b).contains(x * y));
        if (!b.contains_zero()) CHECK((a / b).contains(x / y));
        const long e = static_cast<long>(rng() % 4);
        CHECK(int_pow(a, e).contains(pow_rational(x, e)));
    }
}

TEST_CASE("monotone refinement: shrinking inputs never widens outputs") {
    for (int i = 0; i < 500; ++i) {
        const Interval a = rand_interval(), b = rand_interval();
        const Interval a2(point_inside(a), a.hi);  // a2 subset of a
        const Interval b2(b.lo, point_inside(b));
        CHECK((a + b).contains(a2 + b2));
        CHECK((a * b).contains(a2 * b2));
        CHECK(int_pow(a, 3).contains(int_pow(a2, 3)));
    }
}

TEST_CASE("interval_sqrt of a square re-contains the base") {
    const Rational w = make_rational(1, Integer("1000000000000"));
    for (int i = 0; i < 500; ++i) {
        Rational x = rand_rat();
        if (sign(x) < 0) x = -x;
        const Interval s = interval_sqrt(int_pow(Interval(x), 2), w);
        CHECK(s.contains(x));
        CHECK(s.width() <= w);
    }
}

TEST_CASE("pow_3_2 is sound against cube-then-bisect") {
    const Rational w = make_rational(1, 1000000);
    for (const long n : {1L, 2L, 5L, 10L}) {
        const Rational q = make_rational(n, 3);
        const Interval r = pow_3_2(Interval(q), w);
        CHECK(r.contains(bisect_sqrt(pow_rational(q, 3))));
    }
}
