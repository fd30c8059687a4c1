#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "pentacc/upoly.hpp"

using namespace pentacc;

namespace {

std::mt19937_64 rng(424242);

UniPoly rand_poly(int max_deg, long span = 20) {
    const int d = static_cast<int>(rng() % (max_deg + 1));
    std::vector<Integer> c(d + 1);
    for (auto& v : c) v = static_cast<long>(rng() % (2 * span + 1)) - span;
    if (c.back() == 0) c.back() = 1;
    return UniPoly(std::move(c), "t");
}

}  // namespace

TEST_CASE("basic ring operations") {
    const UniPoly p({1, 2, 3});  // 1 + 2t + 3t^2
    const UniPoly q({0, 1});     // t
    CHECK(p.degree() == 2);
    CHECK(p.leading() == 3);
    CHECK((p + q) == UniPoly({1, 3, 3}));
    CHECK((p - p).is_zero());
    CHECK((p * q) == UniPoly({0, 1, 2, 3}));
    CHECK((p * Integer(2)) == UniPoly({2, 4, 6}));
    CHECK((-p) == UniPoly({-1, -2, -3}));
    CHECK(UniPoly({1, 0, 0}).degree() == 0);  // trailing zeros trimmed
    CHECK(p.derivative() == UniPoly({2, 6}));
    CHECK(UniPoly({5}).derivative().is_zero());
}

TEST_CASE("evaluation paths agree") {
    const UniPoly p({-2, 0, 1});  // t^2 - 2
    CHECK(p.eval(Rational(2)) == 2);
    CHECK(p.eval(Integer(3)) == 7);
    CHECK(p.sign_at(make_rational(3, 2)) == 1);
    CHECK(p.sign_at(make_rational(7, 5)) == -1);
    CHECK(p.eval(Interval(Rational(1), Rational(2))).contains(Rational(0)));
    for (int i = 0; i < 500; ++i) {
        const UniPoly f = rand_poly(6);
        const long n = static_cast<long>(rng() % 41) - 20;
        const long d = static_cast<long>(rng() % 9) + 1;
        const Rational x = make_rational(n, d);
        CHECK(f.sign_at(x) == sign(f.eval(x)));
        CHECK(f.eval(Interval(x)).contains(f.eval(x)));
    }
}

TEST_CASE("content and primitive part") {
    const UniPoly p({6, -9, 12});
    CHECK(p.content() == 3);
    CHECK(p.primitive_part() == UniPoly({2, -3, 4}));
    const UniPoly n({6, -9, -12});
    CHECK(n.content() == -3);  // sign follows the leading coefficient
    CHECK(n.primitive_part() * n.content() == n);
}

TEST_CASE("reversed and reciprocal") {
    const UniPoly p({1, 4, -14, 4, 1});  // p4 shape: reciprocal
    CHECK(p.is_reciprocal());
    CHECK(p.reversed() == p);
    const UniPoly q({2, 3, 1});
    CHECK_FALSE(q.is_reciprocal());
    CHECK(q.reversed() == UniPoly({1, 3, 2}));
}

TEST_CASE("exact_divide") {
    CHECK(exact_divide(UniPoly({-1, 0, 1}), UniPoly({-1, 1})) == UniPoly({1, 1}));
    CHECK_THROWS_AS(exact_divide(UniPoly({1, 0, 1}), UniPoly({-1, 1})), InexactDivision);
    CHECK_THROWS_AS(exact_divide(UniPoly({1, 1}), UniPoly::zero()), ZeroPolynomial);
    CHECK(divides(UniPoly({-1, 1}), UniPoly({-1, 0, 1})));
    CHECK_FALSE(divides(UniPoly({-1, 1}), UniPoly({1, 0, 1})));
    // product/quotient fuzz
    for (int i = 0; i < 300; ++i) {
        const UniPoly a = rand_poly(5), b = rand_poly(5);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("serialize round trip") {
    for (int i = 0; i < 100; ++i) {
        const UniPoly p = rand_poly(8, 1000000);
        CHECK(UniPoly::deserialize(p.serialize()) == p);
    }
    CHECK_THROWS_AS(UniPoly::deserialize(std::string("12\nxyz\n")), Error);
}

TEST_CASE("pseudo_rem_abs is a positive multiple of the true remainder") {
    auto rational_rem = [](const UniPoly& f, const UniPoly& g) {
        std::vector<Rational> r(f.degree() + 1);
        for (int i = 0; i <= f.degree(); ++i) r[i] = Rational(f[i]);
        const Rational glc{g.leading()};
        for (int k = f.degree(); k >= g.degree(); --k) {
            const Rational coef = r[k] / glc;
            if (coef == 0) continue;
            for (int j = 0; j <= g.degree(); ++j)
                r[k - g.degree() + j] -= coef * Rational(g[j]);
            r[k] = 0;
        }
        return r;
    };
    int checked = 0;
    while (checked < 100) {
        const UniPoly f = rand_poly(7), g = rand_poly(4);
        if (g.is_zero() || f.degree() < g.degree() || g.degree() == 0) continue;
        const UniPoly pr = pseudo_rem_abs(f, g);
        const auto rr = rational_rem(f, g);
        // find the scale from the first nonzero coefficient, then verify all
        Rational scale(0);
        bool ok = true;
        for (int i = 0; i < static_cast<int>(rr.size()); ++i) {
            const Rational lhs{pr[i]};
            if (scale == 0 && rr[i] != 0) scale = lhs / rr[i];
            if (scale == 0)
                ok = ok && lhs == 0;
            else
                ok = ok && lhs == scale * rr[i];
        }
        CHECK(ok);
        if (!pr.is_zero()) CHECK(sign(scale) > 0);
        ++checked;
    }
}
