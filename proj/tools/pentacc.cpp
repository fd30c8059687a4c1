// pentacc: classify / verify / figure / roots front end.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pentacc/certificate.hpp"
#include "pentacc/classify.hpp"

using namespace pentacc;

namespace {

// Truncated decimal rendering in which every printed digit is certain: the
// endpoints must agree on all of them.
std::string render_decimal(const Interval& v, int max_digits = 12) {
    for (int d = max_digits; d >= 1; --d) {
        std::string a = decimal_floor(v.lo, d), b = decimal_floor(v.hi, d);
        if (a == b) return a;
    }
    return "[" + decimal_floor(v.lo, max_digits) + ", " + decimal_ceil(v.hi, max_digits) + "]";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingCertificate(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_classify(const std::string& precision, const std::string& out, bool cross,
                 const std::string& cache_dir) {
    auto mp = build_model_polynomials();
    ClassifyOptions opt;
    opt.precision = parse_rational(precision);
    opt.with_cross_check = cross;
    opt.cache_dir = cache_dir;
    auto cert = classify(mp, opt);
    std::ofstream os(out, std::ios::binary);
    if (!os) throw Error("cannot write " + out);
    os << emit_certificate(cert);
    int certified = 0;
    for (const auto& c : cert.candidates)
        if (c.state == CandState::Certified) {
            ++certified;
            std::cout << "certified: t" << c.index << " branch " << to_cstr(c.branch)
                      << " shape " << to_cstr(c.geom.shape) << " m1 "
                      << render_decimal(c.masses.m1, 10) << " m3 "
                      << render_decimal(c.masses.m3, 10) << " m5 "
                      << render_decimal(c.masses.m5, 10) << "\n";
        }
    std::cout << "solutions: " << certified << "\n";
    std::cout << "certificate: " << out << "\n";
    return 0;
}

int cmd_verify(const std::string& path) {
    auto cert = parse_certificate(read_file(path));
    auto rep = verify_certificate(cert);
    for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
    std::cout << (rep.ok ? "verified" : "verification failed") << " ("
              << rep.checks.size() << " checks passed, " << rep.failures.size()
              << " failed)\n";
    return rep.ok ? 0 : 1;
}

void emit_vertices(std::ostream& os, const Interval& x3, const Interval& y3,
                   const Interval& y5) {
    os << "body,x,y\n";
    os << "1," << render_decimal(Interval(make_rational(1, 2))) << ",0\n";
    os << "2," << render_decimal(Interval(make_rational(-1, 2))) << ",0\n";
    os << "3," << render_decimal(x3) << "," << render_decimal(y3) << "\n";
    os << "4," << render_decimal(-x3) << "," << render_decimal(y3) << "\n";
    os << "5,0," << render_decimal(y5) << "\n";
}

int cmd_figure(const std::string& which, const std::string& out,
               const std::string& cert_path) {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw Error("cannot write " + out);
    if (which == "gallery") {
        // representatives of the Figure-3 regions, plus the flat boundary
        const Rational w = make_rational(1, Integer("100000000000000"));
        os << "branch,y5,shape,x3,y3\n";
        struct Row {
            Branch branch;
            Interval y5;
            const char* note;
        };
        const Interval sqrt3_half = interval_sqrt(Interval(3), w) / Interval(2);
        const Row rows[] = {
            {Branch::plus, Interval(make_rational(2, 5)), nullptr},
            {Branch::plus, sqrt3_half, "degenerate"},
            {Branch::plus, Interval(make_rational(3, 2)), nullptr},
            {Branch::minus, Interval(make_rational(19, 10)), nullptr},
        };
        for (const auto& r : rows) {
            const PentagonGeometry g = geometry_from_y5(r.y5, r.branch, w);
            os << to_cstr(r.branch) << "," << render_decimal(r.y5) << ","
               << (r.note ? r.note : to_cstr(g.shape)) << "," << render_decimal(g.x3)
               << "," << render_decimal(g.y3) << "\n";
        }
        std::cout << "figure table: " << out << "\n";
        return 0;
    }
    if (which != "regular" && which != "concave") throw UnknownTarget(which);
    auto cert = parse_certificate(read_file(cert_path));
    const Shape want = which == "regular" ? Shape::convex : Shape::concave;
    for (const auto& c : cert.candidates)
        if (c.state == CandState::Certified && c.geom.shape == want) {
            emit_vertices(os, c.geom.x3, c.geom.y3, c.y5);
            std::cout << "figure table: " << out << "\n";
            return 0;
        }
    throw MissingCertificate("no certified " + which + " solution in " + cert_path);
}

int cmd_roots(const std::string& target, std::string from, std::string to,
              const std::string& cache_dir) {
    auto print_table = [](const std::vector<IsolatedRoot>& roots) {
        std::cout << "index,lo,hi,decimal\n";
        int i = 0;
        for (auto r : roots) {
            r = refine_root(r, make_rational(1, Integer("1000000000000")));
            std::cout << ++i << "," << to_string(r.interval.lo) << ","
                      << to_string(r.interval.hi) << ","
                      << render_decimal(r.interval, 10) << "\n";
        }
    };
    auto mp = build_model_polynomials();
    auto cauchy_range = [](const UniPoly& f) -> Rational {
        Rational bound(1);
        for (int i = 0; i < f.degree(); ++i) {
            Rational v = abs(Rational(f[i])) / abs(Rational(f.leading()));
            if (v > bound) bound = v;
        }
        return bound + 1;
    };

    UniPoly poly;
    Rational a, b;
    if (target == "R60") {
        poly = mp.appendixB_R60;
        const Rational c = cauchy_range(poly);
        a = -c;
        b = c;
    } else if (target == "P" || target == "p120" || target == "p132") {
        auto er = eliminate(mp, cache_dir);
        auto ex = extract_p120(er.C, mp);
        a = make_rational(3, 25);
        b = Rational(1);
        if (target == "p120")
            poly = ex.p120;
        else if (target == "p132")
            poly = ex.p132;
        else {
            // P itself is not squarefree ((1+t^2)^6 is complex anyway, but the
            // real content is the product of the peeled real factors)
            poly = mp.p4 * mp.q4 * ex.p120 * ex.p132;
        }
    } else if (target == "Q") {
        auto er = eliminate(mp, cache_dir);
        auto ex = extract_p120(er.C, mp);
        auto cc = cross_check_Q(mp, ex.p120, cache_dir);
        poly = cc.q2 * cc.q4 * cc.q120 * cc.q132;
        a = make_rational(57735026918962576L, 100000000000000000L);  // sqrt(3)/3
        b = make_rational(70248638810814780L, 100000000000000000L);  // (6+sqrt 3)/11
    } else {
        throw UnknownTarget(target);
    }
    if (!from.empty()) a = parse_rational(from);
    if (!to.empty()) b = parse_rational(to);
    print_table(isolate_roots(poly, a, b));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified classification of the symmetric equilateral pentagonal "
                 "central configurations of the 5-body problem"};
    app.require_subcommand(1);

    std::string precision = "1/1000000000000";
    std::string out = "certificate.txt";
    std::string cache_dir;
    bool cross = false;
    auto* c_classify = app.add_subcommand("classify", "run the full certified pipeline");
    c_classify->add_option("--precision", precision, "certification interval width");
    c_classify->add_option("--out", out, "certificate output path");
    c_classify->add_flag("--cross-check", cross, "also run the Q(s) elimination");
    c_classify->add_option("--cache-dir", cache_dir, "elimination cache directory");

    std::string cert_path = "certificate.txt";
    auto* c_verify = app.add_subcommand("verify", "recheck a certificate's records");
    c_verify->add_option("certificate", cert_path, "certificate path");

    std::string which = "regular", fig_out = "figure.csv", fig_cert = "certificate.txt";
    auto* c_figure = app.add_subcommand("figure", "emit vertex tables");
    c_figure->add_option("which", which, "regular | concave | gallery");
    c_figure->add_option("--out", fig_out, "output path");
    c_figure->add_option("--certificate", fig_cert, "certificate path");

    std::string target = "P", from, to, roots_cache;
    auto* c_roots = app.add_subcommand("roots", "print isolating intervals");
    c_roots->add_option("target", target, "P | p120 | p132 | R60 | Q");
    c_roots->add_option("--from", from, "lower endpoint (rational)");
    c_roots->add_option("--to", to, "upper endpoint (rational)");
    c_roots->add_option("--cache-dir", roots_cache, "elimination cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(precision, out, cross, cache_dir);
        if (c_verify->parsed()) return cmd_verify(cert_path);
        if (c_figure->parsed()) return cmd_figure(which, fig_out, fig_cert);
        if (c_roots->parsed()) return cmd_roots(target, from, to, roots_cache);
    } catch (const IntegrityError& e) {
        std::cerr << "integrity-failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
