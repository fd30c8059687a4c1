// Acceptance gate: re-runs the full pipeline and checks every published
// number end to end. One PASS/FAIL line per criterion; exit 1 on any FAIL.
// argv[1]: cache directory for the two big resultants (optional).

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pentacc/certificate.hpp"
#include "pentacc/classify.hpp"

using namespace pentacc;

namespace {

int failures = 0;

void run(const char* name, const std::function<void()>& body) {
    try {
        body();
        std::printf("PASS  %s\n", name);
    } catch (const std::exception& e) {
        ++failures;
        std::printf("FAIL  %s: %s\n", name, e.what());
    }
    std::fflush(stdout);
}

struct Check : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Check(what);
}

Rational dec7(long n) { return make_rational(n, 10000000); }

bool near(const Interval& v, const Rational& target, const Rational& tol) {
    return abs(v.midpoint() - target) <= tol && v.contains(v.midpoint());
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cache = argc > 1 ? argv[1] : "";

    ModelPolynomials mp;
    EliminationResult er;
    ExtractionResult ex;
    ClassificationCertificate cert;

    run("model data loads with verified digests", [&] {
        mp = build_model_polynomials();
        require(mp.p4 == UniPoly({1, 4, -14, 4, 1}, "t"), "p4 coefficients");
        require(mp.q4 == UniPoly({1, -4, -14, -4, 1}, "t"), "q4 coefficients");
    });
    if (failures) return 1;  // nothing else can run

    run("1. elimination: deg 272, peels (1+t^2)^6 p4 q4 to deg 252", [&] {
        er = eliminate(mp, cache);
        require(er.P.degree() == 272, "P degree");
        require(er.C.degree() == 252, "cofactor degree");
        ex = extract_p120(er.C, mp);
        require(ex.p132.degree() == 132, "p132 degree");
    });
    if (failures) return 1;

    run("2. derived H1 equals the Appendix A assembly (deg 34 / 24 / 10)", [&] {
        require(mp.H1.total_degree() == 34 && mp.H1.degree1() == 24 &&
                    mp.H1.degree2() == 10,
                "H1 degree profile");
        const BiPoly a = mp.H1.primitive_part();
        const BiPoly b = mp.appendixA_H1.primitive_part();
        require(a == b || a == -b, "H1 vs assembly");
    });

    run("3. real-root counts 4,4,28,32; in (3/25,1): 1,1,7,9", [&] {
        const UniPoly* ps[] = {&mp.p4, &mp.q4, &ex.p120, &ex.p132};
        const int whole[] = {4, 4, 28, 32}, strip[] = {1, 1, 7, 9};
        const RootRange tprime = RootRange::open(make_rational(3, 25), Rational(1));
        for (int i = 0; i < 4; ++i) {
            require(sturm_count(*ps[i], RootRange::whole()) == whole[i],
                    "whole-line count #" + std::to_string(i));
            require(sturm_count(*ps[i], tprime) == strip[i],
                    "strip count #" + std::to_string(i));
        }
    });

    run("classification produces a verifiable certificate", [&] {
        ClassifyOptions opt;
        opt.cache_dir = cache;
        cert = classify(mp, opt);
        const VerifyReport rep = verify_certificate(parse_certificate(emit_certificate(cert)));
        require(rep.ok, "self-verification");
    });
    if (failures) return 1;

    // one candidate (plus branch) per root index
    std::map<int, const CandidateRoot*> byidx;
    for (const auto& c : cert.candidates)
        if (c.branch == Branch::plus) byidx[c.index] = &c;

    run("4. the 18 roots match the printed table to 1e-6", [&] {
        static const long table[19] = {0,
            5095254, 1583844,                                              // p4, q4
            1296657, 1818971, 1871837, 7095411, 7332148, 9432977, 9958185, // p120
            1278827, 1318307, 1535285, 1690804, 4693713, 5490528, 5930556, // p132
            9681690, 9962499};
        require(byidx.size() == 18, "18 indexed roots");
        for (int i = 1; i <= 18; ++i) {
            IsolatedRoot r = refine_root(byidx.at(i)->root, dec7(1) / 10);
            require(near(r.interval, dec7(table[i]), make_rational(1, 1000000)),
                    "t" + std::to_string(i));
        }
        // closed forms of the quartic roots
        const Rational tiny = make_rational(1, Integer("1" + std::string(30, '0')));
        const Interval s5 = interval_sqrt(Interval(5), tiny);
        const Interval t1 = Interval(-1) + s5 -
                            interval_sqrt(Interval(5) - Interval(2) * s5, tiny);
        const Interval t2 = Interval(1) + s5 -
                            interval_sqrt(Interval(5) + Interval(2) * s5, tiny);
        require(refine_root(byidx.at(1)->root, tiny * Integer("1000000000000000000"))
                    .interval.contains(t1),
                "t1 closed form");
        require(refine_root(byidx.at(2)->root, tiny * Integer("1000000000000000000"))
                    .interval.contains(t2),
                "t2 closed form");
    });

    run("5. p120 is reciprocal; R60 has 14 real roots; u* and t*", [&] {
        require(ex.p120.is_reciprocal(), "p120 reciprocal");
        require(reciprocal_reduce(ex.p120) == mp.appendixB_R60, "R60 match");
        const auto rd = remark_one(mp.appendixB_R60,
                                   make_rational(1, Integer("1" + std::string(12, '0'))));
        require(rd.r60_real_roots == 14, "14 real roots");
        require(rd.u_star.width() <= make_rational(1, 1000000000), "u* width");
        require(near(rd.u_star, make_rational(20970716051, 10000000000),
                     make_rational(1, 1000000000)),
                "u* value");
        require(near(rd.t_star, make_rational(7332148086, 10000000000),
                     make_rational(1, 1000000000)),
                "t* value");
        IsolatedRoot t7 = refine_root(byidx.at(7)->root, make_rational(1, 100000000));
        require(intersects(rd.t_star, t7.interval), "t* inside the t7 interval");
    });

    run("6. screen passes exactly (I)-(VI); discards and witnesses as printed", [&] {
        // expected survivors with the printed (x3, y5) couples
        struct Couple { int idx; Branch br; long x3, y5; };
        const Couple expect[6] = {{2, Branch::plus, 8090170, 15388418},
                                  {7, Branch::plus, 5402091, 1576605},
                                  {9, Branch::plus, 2540572, 20951},
                                  {4, Branch::minus, -4091526, 13289291},
                                  {14, Branch::minus, -3542470, 4152845},
                                  {18, Branch::minus, 2463622, 18786}};
        std::set<std::pair<int, int>> survivors;
        for (const auto& c : cert.candidates)
            if (c.survived_screen)
                survivors.insert({c.index, c.branch == Branch::plus ? 0 : 1});
        require(survivors.size() == 6, "exactly six survivors");
        const Rational tol = make_rational(1, 1000000);
        for (const auto& e : expect) {
            require(survivors.count({e.idx, e.br == Branch::plus ? 0 : 1}) == 1,
                    "survivor t" + std::to_string(e.idx));
            const CandidateRoot* c = nullptr;
            for (const auto& cc : cert.candidates)
                if (cc.index == e.idx && cc.branch == e.br) c = &cc;
            const Interval x3 = c->state == CandState::Certified ? c->geom.x3 : c->x3;
            const Interval y5 = c->state == CandState::Certified ? c->geom.y5 : c->y5;
            require(near(x3, dec7(e.x3), tol), "x3 of t" + std::to_string(e.idx));
            require(near(y5, dec7(e.y5), tol), "y5 of t" + std::to_string(e.idx));
            if (e.idx == 4 || e.idx == 14)
                require(c->state == CandState::DiscardedGeometry && c->reason == "negative x3",
                        "t" + std::to_string(e.idx) + " negative x3");
            if (e.idx == 9 || e.idx == 18)
                require(c->state == CandState::DiscardedMass && c->mass_name == "m5" &&
                            sign(c->mass_value.hi) < 0,
                        "t" + std::to_string(e.idx) + " negative m5");
        }
        // t5 screen at the printed bracket: h1 > 242 (subdivide against the
        // dependency blow-up of a single-shot evaluation)
        const Rational a = make_rational(1871, 10000), b = make_rational(1872, 10000);
        const Rational w = make_rational(1, Integer("1" + std::string(20, '0')));
        Rational lo_min;
        for (int i = 0; i < 16; ++i) {
            const Interval t(a + (b - a) * i / 16, a + (b - a) * (i + 1) / 16);
            const Interval h1 = h1_raw_eval(raw_geometry(t, Branch::plus, w));
            if (i == 0 || h1.lo < lo_min) lo_min = h1.lo;
        }
        require(lo_min > 242, "t5 bound " + decimal_floor(lo_min, 3));
        // Bolzano witnesses bracketing the concave root
        const auto wl = certified_h1_sign_at(make_rational(7332, 10000), Branch::plus);
        const auto wh = certified_h1_sign_at(make_rational(7333, 10000), Branch::plus);
        require(wl.sign != 0 && wl.sign == -wh.sign, "Bolzano signs");
    });

    const CandidateRoot* convex = nullptr;
    const CandidateRoot* concave = nullptr;
    for (const auto& c : cert.candidates)
        if (c.state == CandState::Certified)
            (c.geom.shape == Shape::convex ? convex : concave) = &c;

    run("7. exactly two solutions with the printed coordinates and masses", [&] {
        int certified = 0;
        for (const auto& c : cert.candidates)
            if (c.state == CandState::Certified) ++certified;
        require(certified == 2 && convex && concave, "two certified");

        const Rational tiny = make_rational(1, Integer("1" + std::string(30, '0')));
        const Rational w10 = make_rational(1, Integer("1" + std::string(10, '0')));
        const Rational w9 = make_rational(1, 1000000000);
        const Interval s5 = interval_sqrt(Interval(5), tiny);
        require(convex->geom.x3.width() <= w10 &&
                    convex->geom.x3.contains((Interval(1) + s5) / Interval(4)),
                "regular x3");
        require(convex->geom.y5.width() <= w10 &&
                    convex->geom.y5.contains(
                        interval_sqrt(Interval(5) + Interval(2) * s5, tiny) / Interval(2)),
                "regular y5");
        require(convex->geom.y3.width() <= w10 &&
                    convex->geom.y3.contains(
                        interval_sqrt(Interval(10) + Interval(2) * s5, tiny) / Interval(4)),
                "regular y3");
        for (const Interval* m : {&convex->masses.m1, &convex->masses.m3, &convex->masses.m5})
            require(m->width() <= w9 && m->contains(make_rational(1, 5)), "regular mass 1/5");

        const Rational tol = make_rational(1, 100000000);
        require(near(concave->geom.x3, make_rational(5402091568, 10000000000), tol), "concave x3");
        require(near(concave->geom.y3, make_rational(9991912848, 10000000000), tol), "concave y3");
        require(near(concave->geom.y5, make_rational(1576604970, 10000000000), tol), "concave y5");
        // Theorem 1(b) prints m1 = 0.0922539749; the sum rule 2m1 + 2m3 + m5 = 1
        // with its own m3, m5 forces 0.0922539097 (a digit slip in the paper)
        require(near(concave->masses.m1, make_rational(922539097, 10000000000), tol), "concave m1");
        require(near(concave->masses.m3, make_rational(3860948766, 10000000000), tol), "concave m3");
        require(near(concave->masses.m5, make_rational(433024273, 10000000000), tol), "concave m5");
    });

    run("8. all e- and f-residuals of both solutions enclose zero", [&] {
        require(convex && concave, "two certified");
        for (const CandidateRoot* c : {convex, concave}) {
            for (const auto& e : c->residuals)
                require(e.contains_zero(), "e-residual of t" + std::to_string(c->index));
            const auto& g = c->geom;
            const auto& m = c->masses;
            const Interval fs[5] = {
                formulas::f1(g.x3, g.y5, g.E1, g.E2, g.E3, m.lambda, m.m1, m.m3),
                formulas::f2(g.x3, g.y5, g.E1, g.E2, g.E3, m.lambda, m.m1, m.m3),
                formulas::f3(g.x3, g.y5, g.E1, g.E2, g.E3, m.lambda, m.m1, m.m3),
                formulas::f4(g.x3, g.y5, g.E1, g.E2, g.E3, m.lambda, m.m1, m.m3),
                formulas::f5(g.x3, g.y5, g.E1, g.E2, g.E3, m.lambda, m.m1, m.m3)};
            for (const auto& f : fs)
                require(f.contains_zero(), "f-residual of t" + std::to_string(c->index));
        }
    });

    run("9. cross-check Q(s): pattern q2^6 q4^2 q120 q132, 11 roots in S", [&] {
        const CrossCheckReport cc = cross_check_Q(mp, ex.p120, cache);
        require(cc.q2.degree() == 2 && cc.q4.degree() == 4 && cc.q120.degree() == 120 &&
                    cc.q132.degree() == 132,
                "factor degrees");
        require(cc.real_q2 == 0 && cc.real_q4 == 4 && cc.real_q120 == 28 &&
                    cc.real_q132 == 32,
                "real-root counts");
        require(cc.inS_q2 == 0 && cc.inS_q4 == 1 && cc.inS_q120 == 4 && cc.inS_q132 == 6,
                "in-S counts");
        require(cc.inS_q2 + cc.inS_q4 + cc.inS_q120 + cc.inS_q132 == 11, "11 total");
    });

    run("10. property suites: interval, Sturm, resultant, reciprocal", [&] {
        std::mt19937_64 rng(987654321);
        auto small = [&](long span) -> Rational {
            return make_rational(static_cast<long>(rng() % (2 * span + 1)) - span,
                                 1 + static_cast<long>(rng() % 8));
        };
        // interval soundness, 1e4 random expressions
        for (int i = 0; i < 10000; ++i) {
            Rational a = small(20), b = small(20);
            if (b < a) std::swap(a, b);
            const Interval x(a, b);
            const Rational p = a + (b - a) * static_cast<long>(rng() % 17) / 16;
            Rational c = small(20), d = small(20);
            if (d < c) std::swap(c, d);
            const Interval y(c, d);
            const Rational q = c + (d - c) * static_cast<long>(rng() % 17) / 16;
            require((x + y).contains(p + q), "interval add");
            require((x - y).contains(p - q), "interval sub");
            require((x * y).contains(p * q), "interval mul");
            const int k = 1 + static_cast<int>(rng() % 4);
            require(int_pow(x, k).contains(pow_rational(p, k)), "interval pow");
            if (!y.contains_zero()) require((x / y).contains(p / q), "interval div");
        }
        // Sturm counts vs constructed ground truth, 1e3 polynomials
        for (int i = 0; i < 1000; ++i) {
            std::set<Rational> roots;
            const int n = 1 + static_cast<int>(rng() % 8);
            for (int j = 0; j < n; ++j) roots.insert(small(10));
            UniPoly p = UniPoly::constant(1);
            for (const auto& r : roots) {
                const Integer den = r.get_den(), num = r.get_num();
                p = p * UniPoly({-num, den});
            }
            require(sturm_count(p, RootRange::whole()) == static_cast<int>(roots.size()),
                    "sturm whole line");
            const Rational a2 = small(12), b2 = small(12);
            if (a2 >= b2) continue;
            int truth = 0;
            for (const auto& r : roots)
                if (a2 < r && r < b2) ++truth;
            require(sturm_count(p, RootRange::open(a2, b2)) == truth, "sturm range");
        }
        // resultant vs product over rational roots, 1e2 pairs
        int done = 0;
        while (done < 100) {
            const int m = 1 + static_cast<int>(rng() % 3);
            BiPoly f = BiPoly::constant(1, "x", "t");
            std::vector<Rational> roots;
            Integer lcf(1);
            for (int j = 0; j < m; ++j) {
                const long av = static_cast<long>(rng() % 11) - 5;
                const long bv = static_cast<long>(rng() % 4) + 1;
                BiPoly lin("x", "t");
                lin.set(1, 0, bv);
                lin.set(0, 0, -av);
                f = f * lin;
                roots.push_back(make_rational(av, bv));
                lcf *= bv;
            }
            BiPoly g("x", "t");
            const int dg = 1 + static_cast<int>(rng() % 3);
            for (int a3 = 0; a3 <= dg; ++a3)
                for (int b3 = 0; b3 <= 2; ++b3)
                    g.set(a3, b3, static_cast<long>(rng() % 13) - 6);
            if (g.coeff(dg, 0) == 0) g.set(dg, 0, 1);
            std::vector<Rational> acc(1, pow_rational(Rational(lcf), dg));
            for (const auto& r : roots) {
                std::vector<Rational> gr(g.degree2() + 1, Rational(0));
                for (const auto& [key, v] : g.terms())
                    gr[key.second] += Rational(v) * pow_rational(r, key.first);
                std::vector<Rational> next(acc.size() + gr.size() - 1, Rational(0));
                for (size_t ii = 0; ii < acc.size(); ++ii)
                    for (size_t jj = 0; jj < gr.size(); ++jj)
                        next[ii + jj] += acc[ii] * gr[jj];
                acc = std::move(next);
            }
            while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
            if (acc.size() == 1 && acc[0] == 0) continue;
            const ResultantResult rr = resultant(f, g, Eliminate::var1);
            std::vector<Rational> full(rr.primitive.degree() + 1);
            for (int ii = 0; ii <= rr.primitive.degree(); ++ii)
                full[ii] = Rational(rr.primitive[ii]) * Rational(rr.content);
            while (full.size() > 1 && full.back() == 0) full.pop_back();
            require(full == acc, "resultant oracle");
            ++done;
        }
        // reciprocal round trip, 1e3 cases
        for (int i = 0; i < 1000; ++i) {
            const int d = static_cast<int>(rng() % 7);
            std::vector<Integer> cs(d + 1);
            for (auto& v : cs) v = static_cast<long>(rng() % 25) - 12;
            if (cs.back() == 0) cs.back() = 1;
            const UniPoly r(std::move(cs), "u");
            const UniPoly p = reciprocal_recompose(r, "t");
            require(p.is_reciprocal() && reciprocal_reduce(p) == r, "reciprocal round trip");
        }
    });

    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
}
