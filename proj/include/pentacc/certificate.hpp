#ifndef PENTACC_CERTIFICATE_HPP
#define PENTACC_CERTIFICATE_HPP

#include <sstream>
#include <string>
#include <vector>

#include "pentacc/classify.hpp"

namespace pentacc {

struct MalformedCertificate : Error {
    explicit MalformedCertificate(const std::string& what)
        : Error("malformed certificate: " + what) {}
};

namespace detail {

inline std::string hex16(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline void emit_interval(std::ostream& os, const char* key, const Interval& v) {
    os << key << ' ' << to_string(v.lo) << ' ' << to_string(v.hi) << '\n';
}

class LineReader {
   public:
    explicit LineReader(const std::string& text) : in_(text) {}

    // next nonempty line split on spaces; empty vector at end of input
    const std::vector<std::string>& next() {
        fields_.clear();
        std::string line;
        while (std::getline(in_, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) fields_.push_back(tok);
            if (!fields_.empty()) return fields_;
        }
        return fields_;
    }
    const std::vector<std::string>& fields() const { return fields_; }

    const std::vector<std::string>& expect(const std::string& key, size_t nargs) {
        next();
        if (fields_.size() != nargs + 1 || fields_[0] != key)
            throw MalformedCertificate("expected '" + key + "'");
        return fields_;
    }
    Rational rat(size_t i) const { return parse_rational(fields_.at(i)); }
    Interval interval(size_t i) const { return {rat(i), rat(i + 1)}; }
    int num(size_t i) const { return std::stoi(fields_.at(i)); }

   private:
    std::istringstream in_;
    std::vector<std::string> fields_;
};

inline Branch parse_branch(const std::string& s) {
    if (s == "plus") return Branch::plus;
    if (s == "minus") return Branch::minus;
    throw MalformedCertificate("branch " + s);
}

inline Shape parse_shape(const std::string& s) {
    if (s == "convex") return Shape::convex;
    if (s == "concave") return Shape::concave;
    if (s == "degenerate") return Shape::degenerate;
    throw MalformedCertificate("shape " + s);
}

inline CandState parse_state(const std::string& s) {
    for (CandState st : {CandState::DiscardedGeometry, CandState::DiscardedH1,
                         CandState::DiscardedMass, CandState::Certified,
                         CandState::Indeterminate})
        if (s == to_cstr(st)) return st;
    throw MalformedCertificate("state " + s);
}

}  // namespace detail

inline std::string emit_certificate(const ClassificationCertificate& cert) {
    std::ostringstream os;
    os << "pentacc-certificate 1\n";
    os << "precision " << to_string(cert.precision) << '\n';
    os << "data-digest " << detail::hex16(cert.data_digest) << '\n';
    os << "p-degree " << cert.P_degree << '\n';
    os << "p-content " << to_string(cert.P_content) << '\n';
    os << "p120-route " << cert.p120_route << '\n';
    os << "runtime-ms " << cert.runtime_ms << '\n';
    os << "r60-real-roots " << cert.remark1.r60_real_roots << '\n';
    detail::emit_interval(os, "u-star", cert.remark1.u_star);
    detail::emit_interval(os, "t-star", cert.remark1.t_star);
    os << "candidates " << cert.candidates.size() << '\n';
    for (const auto& c : cert.candidates) {
        os << "candidate " << c.index << ' ' << c.factor << ' ' << to_cstr(c.branch)
           << '\n';
        os << "state " << to_cstr(c.state) << '\n';
        os << "width " << to_string(c.width) << '\n';
        detail::emit_interval(os, "t", c.t);
        detail::emit_interval(os, "y5", c.y5);
        detail::emit_interval(os, "x3", c.x3);
        os << "screened " << (c.survived_screen ? 1 : 0) << '\n';
        switch (c.state) {
            case CandState::DiscardedH1:
                detail::emit_interval(os, "h1", c.h1_enclosure);
                os << "h1-bound " << to_string(c.h1_bound) << '\n';
                break;
            case CandState::DiscardedGeometry:
                os << "reason " << c.reason << '\n';
                break;
            case CandState::DiscardedMass:
                os << "mass " << c.mass_name << ' ' << to_string(c.mass_value.lo) << ' '
                   << to_string(c.mass_value.hi) << '\n';
                break;
            case CandState::Certified:
                detail::emit_interval(os, "y3", c.geom.y3);
                detail::emit_interval(os, "gx3", c.geom.x3);
                detail::emit_interval(os, "e1", c.geom.E1);
                detail::emit_interval(os, "e2", c.geom.E2);
                detail::emit_interval(os, "e3", c.geom.E3);
                os << "shape " << to_cstr(c.geom.shape) << '\n';
                detail::emit_interval(os, "lambda", c.masses.lambda);
                detail::emit_interval(os, "m1", c.masses.m1);
                detail::emit_interval(os, "m3", c.masses.m3);
                detail::emit_interval(os, "m5", c.masses.m5);
                for (const auto* w : {&c.witness_lo, &c.witness_hi}) {
                    os << (w == &c.witness_lo ? "witness-lo " : "witness-hi ")
                       << to_string(w->t) << ' ' << w->sign << ' '
                       << to_string(w->enclosure.lo) << ' ' << to_string(w->enclosure.hi)
                       << '\n';
                }
                break;
            default:
                break;
        }
        os << "end\n";
    }
    if (cert.cross_check) {
        const auto& cc = *cert.cross_check;
        os << "cross-check 1\n";
        os << "q2 " << cc.q2.degree() << ' ' << cc.real_q2 << ' ' << cc.inS_q2 << '\n';
        os << "q4 " << cc.q4.degree() << ' ' << cc.real_q4 << ' ' << cc.inS_q4 << '\n';
        os << "q120 " << cc.q120.degree() << ' ' << cc.real_q120 << ' ' << cc.inS_q120
           << '\n';
        os << "q132 " << cc.q132.degree() << ' ' << cc.real_q132 << ' ' << cc.inS_q132
           << '\n';
    } else {
        os << "cross-check 0\n";
    }
    os << "end-certificate\n";
    return os.str();
}

inline ClassificationCertificate parse_certificate(const std::string& text) {
    detail::LineReader r(text);
    ClassificationCertificate cert;
    {
        const auto& f = r.expect("pentacc-certificate", 1);
        if (f[1] != "1") throw MalformedCertificate("unsupported version " + f[1]);
    }
    r.expect("precision", 1);
    cert.precision = r.rat(1);
    {
        const auto& f = r.expect("data-digest", 1);
        cert.data_digest = std::stoull(f[1], nullptr, 16);
    }
    r.expect("p-degree", 1);
    cert.P_degree = r.num(1);
    {
        Integer c;
        const auto& g = r.expect("p-content", 1);
        if (mpz_set_str(c.get_mpz_t(), g[1].c_str(), 10) != 0)
            throw MalformedCertificate("p-content");
        cert.P_content = c;
    }
    cert.p120_route = r.expect("p120-route", 1)[1];
    cert.runtime_ms = std::stol(r.expect("runtime-ms", 1)[1]);
    r.expect("r60-real-roots", 1);
    cert.remark1.r60_real_roots = r.num(1);
    r.expect("u-star", 2);
    cert.remark1.u_star = r.interval(1);
    r.expect("t-star", 2);
    cert.remark1.t_star = r.interval(1);
    const int n = (r.expect("candidates", 1), r.num(1));
    for (int i = 0; i < n; ++i) {
        const auto& h = r.expect("candidate", 3);
        CandidateRoot c;
        c.index = std::stoi(h[1]);
        c.factor = h[2];
        c.branch = detail::parse_branch(h[3]);
        c.state = detail::parse_state(r.expect("state", 1)[1]);
        c.width = (r.expect("width", 1), r.rat(1));
        c.t = (r.expect("t", 2), r.interval(1));
        c.y5 = (r.expect("y5", 2), r.interval(1));
        c.x3 = (r.expect("x3", 2), r.interval(1));
        c.survived_screen = (r.expect("screened", 1), r.num(1)) != 0;
        switch (c.state) {
            case CandState::DiscardedH1:
                c.h1_enclosure = (r.expect("h1", 2), r.interval(1));
                c.h1_bound = (r.expect("h1-bound", 1), r.rat(1));
                break;
            case CandState::DiscardedGeometry: {
                const auto& f = r.next();
                if (f.size() < 2 || f[0] != "reason")
                    throw MalformedCertificate("expected 'reason'");
                std::string msg = f[1];
                for (size_t k = 2; k < f.size(); ++k) msg += " " + f[k];
                c.reason = msg;
                break;
            }
            case CandState::DiscardedMass: {
                const auto& f = r.expect("mass", 3);
                c.mass_name = f[1];
                c.mass_value = r.interval(2);
                break;
            }
            case CandState::Certified: {
                c.geom.y3 = (r.expect("y3", 2), r.interval(1));
                c.geom.x3 = (r.expect("gx3", 2), r.interval(1));
                c.geom.E1 = (r.expect("e1", 2), r.interval(1));
                c.geom.E2 = (r.expect("e2", 2), r.interval(1));
                c.geom.E3 = (r.expect("e3", 2), r.interval(1));
                c.geom.y5 = c.y5;
                c.geom.branch = c.branch;
                c.geom.shape = detail::parse_shape(r.expect("shape", 1)[1]);
                c.masses.lambda = (r.expect("lambda", 2), r.interval(1));
                c.masses.m1 = (r.expect("m1", 2), r.interval(1));
                c.masses.m3 = (r.expect("m3", 2), r.interval(1));
                c.masses.m5 = (r.expect("m5", 2), r.interval(1));
                for (auto* w : {&c.witness_lo, &c.witness_hi}) {
                    const auto& f =
                        r.expect(w == &c.witness_lo ? "witness-lo" : "witness-hi", 4);
                    w->t = parse_rational(f[1]);
                    w->sign = std::stoi(f[2]);
                    w->enclosure = {parse_rational(f[3]), parse_rational(f[4])};
                }
                break;
            }
            default:
                break;
        }
        r.expect("end", 0);
        cert.candidates.push_back(std::move(c));
    }
    const int has_cc = (r.expect("cross-check", 1), r.num(1));
    if (has_cc) {
        CrossCheckReport cc;
        struct Row {
            const char* key;
            UniPoly* poly;
            int* real;
            int* inS;
        };
        const Row rows[] = {{"q2", &cc.q2, &cc.real_q2, &cc.inS_q2},
                            {"q4", &cc.q4, &cc.real_q4, &cc.inS_q4},
                            {"q120", &cc.q120, &cc.real_q120, &cc.inS_q120},
                            {"q132", &cc.q132, &cc.real_q132, &cc.inS_q132}};
        for (const auto& row : rows) {
            const auto& f = r.expect(row.key, 3);
            // degree is kept as a placeholder monomial; the coefficients are
            // not part of the certificate
            *row.poly = UniPoly::monomial(1, std::stoi(f[1]), "s");
            *row.real = std::stoi(f[2]);
            *row.inS = std::stoi(f[3]);
        }
        cert.cross_check = std::move(cc);
    }
    r.expect("end-certificate", 0);
    return cert;
}

// ---------------------------------------------------------------------------
// Verification: recompute every bound and sign witness from the recorded
// data using only the numeric core and the pentagon model. The elimination
// step is deliberately not re-run.
// ---------------------------------------------------------------------------

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> checks;    // names of passed checks
    std::vector<std::string> failures;  // human-readable failure notes
};

namespace detail {

inline void check(VerifyReport& rep, bool cond, const std::string& name) {
    if (cond)
        rep.checks.push_back(name);
    else {
        rep.ok = false;
        rep.failures.push_back(name);
    }
}

inline bool same(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

}  // namespace detail

inline VerifyReport verify_certificate(const ClassificationCertificate& cert) {
    VerifyReport rep;
    auto& F = rep;

    detail::check(F, cert.candidates.size() == 36, "36 candidates present");
    int certified = 0, screened = 0, convex = 0, concave = 0;
    for (const auto& c : cert.candidates) {
        const std::string tag = "t" + std::to_string(c.index) + "/" + to_cstr(c.branch);
        if (c.survived_screen) ++screened;
        const Rational sqrt_w = c.width / Integer("10000");
        switch (c.state) {
            case CandState::DiscardedH1: {
                RawGeometry rg;
                try {
                    rg = raw_geometry(c.t, c.branch, sqrt_w);
                } catch (const Error&) {
                    detail::check(F, false, tag + " h1 enclosure recomputable");
                    continue;
                }
                const Interval h1 = h1_raw_eval(rg);
                detail::check(F, detail::same(h1, c.h1_enclosure),
                              tag + " h1 enclosure reproduced");
                detail::check(F, !h1.contains_zero(), tag + " h1 enclosure excludes 0");
                const Rational bound = sign(h1.lo) > 0 ? h1.lo : -h1.hi;
                detail::check(F, bound == c.h1_bound && bound > 0,
                              tag + " h1 distance bound");
                break;
            }
            case CandState::DiscardedGeometry: {
                if (c.reason == "negative x3") {
                    RawGeometry rg;
                    bool ok = false;
                    try {
                        rg = raw_geometry(c.t, c.branch, sqrt_w);
                        ok = detail::same(rg.x3, c.x3) && sign(rg.x3.hi) <= 0;
                    } catch (const Error&) {
                    }
                    detail::check(F, ok, tag + " negative x3 reproduced");
                } else {
                    bool threw = false;
                    try {
                        RawGeometry rg = raw_geometry(c.t, c.branch, sqrt_w);
                        geometry_from_y5(rg.y5, c.branch, sqrt_w);
                    } catch (const Error&) {
                        threw = true;
                    }
                    detail::check(F, threw, tag + " geometry rejection reproduced");
                }
                break;
            }
            case CandState::DiscardedMass: {
                bool ok = false;
                try {
                    RawGeometry rg = raw_geometry(c.t, c.branch, sqrt_w);
                    PentagonGeometry g;
                    g.y5 = rg.y5;
                    g.branch = c.branch;
                    g.x3 = rg.x3;
                    g.y3 = y3_enclosure(rg.y5, c.branch, sqrt_w);
                    g.E1 = rg.E1;
                    g.E2 = rg.E2;
                    g.E3 = rg.E3;
                    MassSolution ms = solve_masses(g);
                    const Interval* v = c.mass_name == "m1"
                                            ? &ms.m1
                                            : c.mass_name == "m3" ? &ms.m3 : &ms.m5;
                    ok = detail::same(*v, c.mass_value) && sign(v->hi) < 0;
                } catch (const Error&) {
                }
                detail::check(F, ok, tag + " negative " + c.mass_name + " reproduced");
                break;
            }
            case CandState::Certified: {
                ++certified;
                if (c.geom.shape == Shape::convex) ++convex;
                if (c.geom.shape == Shape::concave) ++concave;
                try {
                    RawGeometry rg = raw_geometry(c.t, c.branch, sqrt_w);
                    detail::check(F, detail::same(rg.y5, c.y5), tag + " y5 reproduced");
                    PentagonGeometry g = geometry_from_y5(rg.y5, c.branch, sqrt_w);
                    detail::check(F,
                                  detail::same(g.x3, c.geom.x3) &&
                                      detail::same(g.y3, c.geom.y3) &&
                                      g.shape == c.geom.shape,
                                  tag + " geometry reproduced");
                    MassSolution ms = solve_masses(g);
                    detail::check(F,
                                  detail::same(ms.lambda, c.masses.lambda) &&
                                      detail::same(ms.m1, c.masses.m1) &&
                                      detail::same(ms.m3, c.masses.m3) &&
                                      detail::same(ms.m5, c.masses.m5),
                                  tag + " masses reproduced");
                    detail::check(F,
                                  sign(ms.m1.lo) > 0 && sign(ms.m3.lo) > 0 &&
                                      sign(ms.m5.lo) > 0,
                                  tag + " masses positive");
                    detail::check(F, sign(ms.lambda.hi) < 0, tag + " multiplier negative");
                    // Bolzano witnesses at the recorded endpoints
                    detail::check(F,
                                  c.witness_lo.t == c.t.lo && c.witness_hi.t == c.t.hi,
                                  tag + " witnesses at interval endpoints");
                    const H1SignWitness wl = certified_h1_sign_at(c.witness_lo.t, c.branch);
                    const H1SignWitness wh = certified_h1_sign_at(c.witness_hi.t, c.branch);
                    detail::check(F,
                                  wl.sign == c.witness_lo.sign &&
                                      wh.sign == c.witness_hi.sign && wl.sign != 0 &&
                                      wl.sign == -wh.sign &&
                                      detail::same(wl.enclosure, c.witness_lo.enclosure) &&
                                      detail::same(wh.enclosure, c.witness_hi.enclosure),
                                  tag + " opposite h1 signs certified");
                    auto res = cc_residuals(g, ms);
                    bool all0 = true;
                    for (const auto& e : res) all0 = all0 && e.contains_zero();
                    detail::check(F, all0, tag + " residual enclosures contain 0");
                } catch (const Error& e) {
                    detail::check(F, false, tag + " recomputation (" + e.what() + ")");
                }
                break;
            }
            default:
                detail::check(F, false, tag + " resolved (state " +
                                            std::string(to_cstr(c.state)) + ")");
        }
    }
    detail::check(F, certified == 2, "exactly two certified solutions");
    detail::check(F, convex == 1 && concave == 1, "one convex and one concave solution");
    detail::check(F, screened == 6, "interval screen passes exactly six couples");

    // Remark 1 consistency: t* solves t^2 - u* t + 1 and lies on the
    // certified concave root interval
    const Interval& u = cert.remark1.u_star;
    const Interval& ts = cert.remark1.t_star;
    detail::check(F, (int_pow(ts, 2) - u * ts + Interval(1)).contains_zero(),
                  "t* solves t^2 - u* t + 1 = 0");
    detail::check(F, cert.remark1.r60_real_roots == 14, "R60 has 14 real roots");
    bool tstar_hits = false;
    for (const auto& c : cert.candidates)
        if (c.state == CandState::Certified && c.factor == "p120" &&
            intersects(ts, c.t))
            tstar_hits = true;
    detail::check(F, tstar_hits, "t* lies on the certified p120 root");
    return rep;
}

}  // namespace pentacc

#endif
