#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "pentacc/resultant.hpp"

using namespace pentacc;

namespace {

std::mt19937_64 rng(5150);

BiPoly rand_bipoly(int dx, int dt, long span = 6) {
    BiPoly p("x", "t");
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dt; ++j)
            p.set(i, j, static_cast<long>(rng() % (2 * span + 1)) - span);
    if (p.coeff(dx, 0) == 0) p.set(dx, 0, 1);  // ensure full degree in x
    return p;
}

// full signed resultant (primitive * content) as a UniPoly with an Integer
// scale folded in via rational coefficients
std::vector<Rational> full_resultant(const BiPoly& f, const BiPoly& g) {
    const ResultantResult rr = resultant(f, g, Eliminate::var1);
    std::vector<Rational> out(rr.primitive.degree() + 1);
    for (int i = 0; i <= rr.primitive.degree(); ++i)
        out[i] = Rational(rr.primitive[i]) * Rational(rr.content);
    return out;
}

}  // namespace

TEST_CASE("linear example fixes the convention") {
    // Res_s(s - t, s + t) = 2t
    BiPoly f("s", "t"), g("s", "t");
    f.set(1, 0, 1);
    f.set(0, 1, -1);
    g.set(1, 0, 1);
    g.set(0, 1, 1);
    const ResultantResult rr = resultant(f, g, Eliminate::var1);
    CHECK(rr.primitive == UniPoly({0, 1}, "t"));
    CHECK(rr.content == 2);
}

TEST_CASE("constant example fixes the sign") {
    // Res_x(x - 2, x - 5) = g(2) = -3
    BiPoly f("x", "t"), g("x", "t");
    f.set(1, 0, 1);
    f.set(0, 0, -2);
    g.set(1, 0, 1);
    g.set(0, 0, -5);
    const ResultantResult rr = resultant(f, g, Eliminate::var1);
    CHECK(rr.primitive.degree() == 0);
    CHECK(rr.primitive[0] * rr.content == -3);
}

TEST_CASE("degenerate inputs") {
    BiPoly f("x", "t");
    f.set(0, 1, 1);  // degree 0 in x
    BiPoly g("x", "t");
    g.set(1, 0, 1);
    CHECK_THROWS_AS(resultant(f, g, Eliminate::var1), DegenerateInput);
    CHECK_THROWS_AS(resultant(BiPoly::zero(), g, Eliminate::var1), DegenerateInput);
}

TEST_CASE("swap antisymmetry: Res(f,g) = (-1)^(mn) Res(g,f)") {
    for (int i = 0; i < 100; ++i) {
        const BiPoly f = rand_bipoly(1 + static_cast<int>(rng() % 2), 2);
        const BiPoly g = rand_bipoly(1 + static_cast<int>(rng() % 2), 2);
        const auto rfg = full_resultant(f, g);
        auto rgf = full_resultant(g, f);
        const int m = f.degree1(), n = g.degree1();
        if ((m * n) % 2 == 1)
            for (auto& c : rgf) c = -c;
        CHECK(rfg == rgf);
    }
}

TEST_CASE("product-over-roots oracle") {
    // f(x) = prod (b_i x - a_i) with rational roots a_i/b_i; then
    // Res_x(f, g) = lc(f)^(deg_x g) * prod_i g(a_i/b_i, t)
    int done = 0;
    while (done < 100) {
        const int m = 1 + static_cast<int>(rng() % 3);
        BiPoly f = BiPoly::constant(1, "x", "t");
        std::vector<Rational> roots;
        Integer lcf(1);
        for (int i = 0; i < m; ++i) {
            const long a = static_cast<long>(rng() % 11) - 5;
            const long b = static_cast<long>(rng() % 4) + 1;
            BiPoly lin("x", "t");
            lin.set(1, 0, b);
            lin.set(0, 0, -a);
            f = f * lin;
            roots.push_back(make_rational(a, b));
            lcf *= b;
        }
        const BiPoly g = rand_bipoly(1 + static_cast<int>(rng() % 3), 2);
        const int dg = g.degree1();

        // oracle: rational-coefficient polynomial in t
        std::vector<Rational> acc(1, pow_rational(Rational(lcf), dg));
        for (const auto& r : roots) {
            // evaluate g at x = r: coefficients in t
            std::vector<Rational> gr(g.degree2() + 1, Rational(0));
            for (const auto& [k, v] : g.terms())
                gr[k.second] += Rational(v) * pow_rational(r, k.first);
            // acc *= gr
            std::vector<Rational> next(acc.size() + gr.size() - 1, Rational(0));
            for (size_t i = 0; i < acc.size(); ++i)
                for (size_t j = 0; j < gr.size(); ++j) next[i + j] += acc[i] * gr[j];
            acc = std::move(next);
        }
        while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
        if (acc.size() == 1 && acc[0] == 0) continue;  // g vanished at a root

        auto full = full_resultant(f, g);
        while (full.size() > 1 && full.back() == 0) full.pop_back();
        CHECK(full == acc);
        ++done;
    }
}

TEST_CASE("content times primitive reproduces the raw determinant") {
    for (int i = 0; i < 50; ++i) {
        const BiPoly f = rand_bipoly(2, 1), g = rand_bipoly(2, 1);
        const ResultantResult rr = resultant(f, g, Eliminate::var1);
        if (rr.primitive.is_zero()) {
            CHECK(rr.content == 0);
            continue;
        }
        CHECK(sign(rr.primitive.leading()) > 0);
        CHECK(rr.primitive.content() == 1);
    }
}
