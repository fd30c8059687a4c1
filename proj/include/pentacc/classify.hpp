#ifndef PENTACC_CLASSIFY_HPP
#define PENTACC_CLASSIFY_HPP

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentacc/model.hpp"
#include "pentacc/model_data.hpp"
#include "pentacc/modgcd.hpp"
#include "pentacc/polyops.hpp"
#include "pentacc/resultant.hpp"
#include "pentacc/roots.hpp"

namespace pentacc {

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

struct EliminationResult {
    UniPoly P;         // primitive part of Res_s(H1, H2), degree 272
    Integer content;   // stripped integer content (signed)
    UniPoly C;         // cofactor after peeling (1+t^2)^6, p4, q4; degree 252
    bool from_cache = false;
};

inline EliminationResult eliminate(const ModelPolynomials& mp,
                                   const std::string& cache_dir = "") {
    EliminationResult er;
    std::filesystem::path cache_file;
    if (!cache_dir.empty()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(mp.data_digest));
        cache_file = std::filesystem::path(cache_dir) / ("elimination-" + std::string(buf) + ".txt");
        std::ifstream in(cache_file);
        if (in) {
            std::string content_line;
            if (std::getline(in, content_line)) {
                Integer c;
                if (mpz_set_str(c.get_mpz_t(), content_line.c_str(), 10) == 0) {
                    er.P = UniPoly::deserialize(in, "t");
                    er.content = c;
                    er.from_cache = true;
                }
            }
        }
    }
    if (!er.from_cache) {
        auto rr = resultant(mp.H1, mp.H2, Eliminate::var1);
        er.P = std::move(rr.primitive);
        er.content = std::move(rr.content);
        if (!cache_file.empty()) {
            std::filesystem::create_directories(cache_file.parent_path());
            std::ofstream out(cache_file);
            out << er.content.get_str() << '\n';
            er.P.serialize(out);
        }
    }
    if (er.P.degree() != 272) throw IntegrityError("Res_s(H1,H2) degree != 272");

    const UniPoly t2p1({1, 0, 1}, "t");
    UniPoly c = er.P;
    for (int i = 0; i < 6; ++i) {
        try {
            c = exact_divide(c, t2p1);
        } catch (const InexactDivision&) {
            throw PeelFailure("(1+t^2)^" + std::to_string(i + 1));
        }
    }
    try {
        c = exact_divide(c, mp.p4);
    } catch (const InexactDivision&) {
        throw PeelFailure("p4");
    }
    try {
        c = exact_divide(c, mp.q4);
    } catch (const InexactDivision&) {
        throw PeelFailure("q4");
    }
    er.C = c.primitive_part();
    if (er.C.degree() != 252) throw IntegrityError("cofactor degree != 252");
    return er;
}

// ---------------------------------------------------------------------------
// p120 extraction (Appendix B chain)
// ---------------------------------------------------------------------------

struct ExtractionResult {
    UniPoly p120, p132;
    UniPoly R60;        // reciprocal_reduce(p120), must equal the embedded copy
    std::string route;  // "gcd" or "embedded"
};

inline ExtractionResult extract_p120(const UniPoly& C, const ModelPolynomials& mp) {
    ExtractionResult ex;
    UniPoly g = integer_poly_gcd(C, C.reversed());
    if (g.degree() == 120) {
        ex.p120 = g;
        ex.route = "gcd";
    } else {
        // fall back to reconstructing p120 = t^60 R60(t + 1/t) from Appendix B
        ex.p120 = reciprocal_recompose(mp.appendixB_R60, "t");
        if (!divides(ex.p120, C)) throw ExtractionAmbiguous();
        ex.route = "embedded";
    }
    ex.p132 = exact_divide(C, ex.p120).primitive_part();
    ex.R60 = reciprocal_reduce(ex.p120);
    if (ex.R60 != mp.appendixB_R60)
        throw AppendixMismatch("reciprocal_reduce(p120) vs embedded R60");
    if (ex.p132.degree() != 132) throw IntegrityError("p132 degree != 132");
    return ex;
}

// ---------------------------------------------------------------------------
// Candidate enumeration and adjudication
// ---------------------------------------------------------------------------

// y5 = (1-t^2)/(4t) is decreasing for t > 0, so endpoint evaluation is a
// tight sound enclosure.
inline Interval y5_from_t(const Interval& t) {
    if (sign(t.lo) <= 0) throw DegenerateInput("y5_from_t needs t > 0");
    auto f = [](const Rational& v) -> Rational { return (1 - v * v) / (4 * v); };
    return {f(t.hi), f(t.lo)};
}

// Enclosures of y5, x3 = Psi^branch(y5) and the E-symbols without pentagon
// validity checks: the interval screen evaluates h1 on every candidate, even
// the geometrically inadmissible ones, exactly as the paper does.
struct RawGeometry {
    Interval y5, x3, E1, E2, E3;
};

inline RawGeometry raw_geometry(const Interval& t, Branch branch,
                                const Rational& sqrt_width) {
    RawGeometry rg;
    rg.y5 = y5_from_t(t);
    rg.x3 = x3_enclosure(rg.y5, branch, sqrt_width);
    rg.E1 = interval_sqrt(Interval(1) + Interval(2) * rg.x3, sqrt_width);
    rg.E2 = interval_sqrt(Interval(3) + Interval(4) * rg.x3 - Interval(4) * int_pow(rg.x3, 2),
                          sqrt_width);
    rg.E3 = pow_3_2(Interval(1) + Interval(4) * int_pow(rg.y5, 2), sqrt_width);
    return rg;
}

inline Interval h1_raw_eval(const RawGeometry& rg) {
    return formulas::h1(rg.x3, rg.y5, rg.E1, rg.E2, rg.E3);
}

// Certified sign of h1 at an exact rational t on the given branch, with the
// enclosure that witnesses it. Tightens until the enclosure excludes zero.
struct H1SignWitness {
    Rational t;
    int sign = 0;
    Interval enclosure;
};

inline H1SignWitness certified_h1_sign_at(const Rational& t, Branch branch,
                                          int max_tighten = 12) {
    H1SignWitness w;
    w.t = t;
    Rational width = make_rational(1, Integer("1" + std::string(16, '0')));
    for (int i = 0; i < max_tighten; ++i) {
        RawGeometry rg = raw_geometry(Interval(t), branch, width);
        w.enclosure = h1_raw_eval(rg);
        w.sign = w.enclosure.certain_sign();
        if (w.sign != 0) return w;
        width = width / Integer("100000000");
    }
    return w;  // sign 0: undecided (t may be an exact root)
}

enum class CandState {
    Pending,
    DiscardedGeometry,
    DiscardedH1,
    DiscardedMass,
    Certified,
    Indeterminate,
};

inline const char* to_cstr(CandState s) {
    switch (s) {
        case CandState::Pending: return "pending";
        case CandState::DiscardedGeometry: return "discarded-geometry";
        case CandState::DiscardedH1: return "discarded-h1";
        case CandState::DiscardedMass: return "discarded-mass";
        case CandState::Certified: return "certified";
        default: return "indeterminate";
    }
}

struct CandidateRoot {
    int index = 0;            // paper numbering: t1 (p4), t2 (q4), t3..t9 (p120), t10..t18 (p132)
    std::string factor;       // which peeled factor owns the root
    IsolatedRoot root;
    Branch branch = Branch::plus;

    CandState state = CandState::Pending;
    Rational width;           // refinement width at termination
    Interval t;               // final t interval
    Interval y5, x3;          // enclosures at termination (when computable)
    bool survived_screen = false;  // h1 enclosure contained 0 at screen width

    // DiscardedH1
    Interval h1_enclosure;
    Rational h1_bound;        // distance of the enclosure from zero

    // DiscardedGeometry
    std::string reason;

    // DiscardedMass
    std::string mass_name;
    Interval mass_value;

    // Certified
    H1SignWitness witness_lo, witness_hi;
    PentagonGeometry geom;
    MassSolution masses;
    std::array<Interval, 10> residuals{};
};

struct PrecisionSchedule {
    Rational start = make_rational(1, 10000);                                // 1e-4
    Rational stop = make_rational(1, Integer("1" + std::string(30, '0')));   // 1e-30
    Rational certify = make_rational(1, Integer("1" + std::string(12, '0'))); // 1e-12
    long factor = 10;
};

inline std::vector<CandidateRoot> enumerate_candidates(const UniPoly& p4,
                                                       const UniPoly& q4,
                                                       const UniPoly& p120,
                                                       const UniPoly& p132) {
    // T' = (3/25, 1): the upper endpoint printed as "100" cannot be right,
    // since the reciprocal partner 1/t1 ~ 1.96 of the p4 root would then be
    // counted too; T ~ (0.127, 1) needs 1.00.
    const Rational a = make_rational(3, 25), b(1);
    struct Src {
        const UniPoly* poly;
        const char* name;
        int expect;
    };
    const Src sources[] = {{&p4, "p4", 1}, {&q4, "q4", 1}, {&p120, "p120", 7},
                           {&p132, "p132", 9}};
    std::vector<std::pair<IsolatedRoot, std::string>> table;
    for (const auto& s : sources) {
        auto roots = isolate_roots(*s.poly, a, b);
        if (static_cast<int>(roots.size()) != s.expect)
            throw WrongRootCount(std::string(s.name) + " in T'");
        for (auto& r : roots) table.emplace_back(std::move(r), s.name);
    }
    if (table.size() != 18) throw WrongRootCount("total in T'");
    std::vector<CandidateRoot> out;
    int idx = 0;
    for (auto& [root, name] : table) {
        ++idx;
        for (Branch br : {Branch::plus, Branch::minus}) {
            CandidateRoot c;
            c.index = idx;
            c.factor = name;
            c.root = root;
            c.branch = br;
            out.push_back(std::move(c));
        }
    }
    return out;
}

inline void adjudicate(CandidateRoot& c, const PrecisionSchedule& sched = {}) {
    Rational w = sched.start;
    while (true) {
        c.root = refine_root(c.root, w);
        c.width = w;
        c.t = c.root.interval;
        const Rational sqrt_w = w / Integer("10000");

        RawGeometry rg;
        try {
            rg = raw_geometry(c.t, c.branch, sqrt_w);
        } catch (const Error&) {
            c.state = CandState::DiscardedGeometry;
            c.reason = "outside parameter domain";
            return;
        }
        c.y5 = rg.y5;
        c.x3 = rg.x3;

        // 1) interval screen on h1
        const Interval h1 = h1_raw_eval(rg);
        if (!h1.contains_zero()) {
            c.state = CandState::DiscardedH1;
            c.h1_enclosure = h1;
            c.h1_bound = sign(h1.lo) > 0 ? h1.lo : -h1.hi;
            return;
        }

        // 2) geometric admissibility: x3 must be positive. Only decided once
        // the schedule is tight, so a wide h1 enclosure straddling zero at a
        // coarse width cannot shadow a later h1 discard.
        if (w <= sched.certify && sign(c.x3.hi) <= 0) {
            c.survived_screen = true;
            c.state = CandState::DiscardedGeometry;
            c.reason = "negative x3";
            return;
        }

        // 3) mass screen / certification once the schedule is tight enough
        if (w <= sched.certify && sign(c.x3.lo) > 0) {
            c.survived_screen = true;
            bool masses_ok = false;
            MassSolution ms;
            try {
                PentagonGeometry g;
                g.y5 = rg.y5;
                g.branch = c.branch;
                g.x3 = rg.x3;
                g.y3 = y3_enclosure(rg.y5, c.branch, sqrt_w);
                g.E1 = rg.E1;
                g.E2 = rg.E2;
                g.E3 = rg.E3;
                ms = solve_masses(g);
                masses_ok = true;
                c.geom = g;
            } catch (const SingularDenominator&) {
                // keep refining
            }
            if (masses_ok) {
                const std::pair<const Interval*, const char*> checks[] = {
                    {&ms.m1, "m1"}, {&ms.m3, "m3"}, {&ms.m5, "m5"}};
                for (const auto& [mi, name] : checks) {
                    if (sign(mi->hi) < 0) {
                        c.state = CandState::DiscardedMass;
                        c.mass_name = name;
                        c.mass_value = *mi;
                        c.masses = ms;
                        return;
                    }
                }
                const bool positive = sign(ms.m1.lo) > 0 && sign(ms.m3.lo) > 0 &&
                                      sign(ms.m5.lo) > 0;
                if (positive) {
                    // Bolzano witness inside the refined interval
                    c.witness_lo = certified_h1_sign_at(c.t.lo, c.branch);
                    c.witness_hi = certified_h1_sign_at(c.t.hi, c.branch);
                    if (c.witness_lo.sign != 0 && c.witness_hi.sign != 0 &&
                        c.witness_lo.sign != c.witness_hi.sign) {
                        // certification additionally requires a valid pentagon
                        try {
                            c.geom = geometry_from_y5(rg.y5, c.branch, sqrt_w);
                        } catch (const Error& e) {
                            c.state = CandState::DiscardedGeometry;
                            c.reason = e.what();
                            return;
                        }
                        c.masses = solve_masses(c.geom);
                        c.residuals = cc_residuals(c.geom, c.masses);
                        c.state = CandState::Certified;
                        return;
                    }
                }
            }
        }

        if (w <= sched.stop) {
            c.state = CandState::Indeterminate;
            c.survived_screen = true;
            return;
        }
        w = w / sched.factor;
        if (w < sched.stop) w = sched.stop;
    }
}

// ---------------------------------------------------------------------------
// Appendix-B root chain: u* and t*
// ---------------------------------------------------------------------------

struct RemarkOneData {
    int r60_real_roots = 0;
    Interval u_star;   // unique root of R60 in [205/100, 210/100]
    Interval t_star;   // smallest root of t^2 - u* t + 1
};

inline RemarkOneData remark_one(const UniPoly& R60, const Rational& width) {
    RemarkOneData rd;
    // Cauchy bound for all real roots
    Rational bound(1);
    for (int i = 0; i < R60.degree(); ++i) {
        Rational v = abs(Rational(R60[i])) / abs(Rational(R60.leading()));
        if (v > bound) bound = v;
    }
    bound = bound + 1;
    auto roots = isolate_roots(R60, -bound, bound);
    rd.r60_real_roots = static_cast<int>(roots.size());
    std::optional<IsolatedRoot> ustar;
    const Rational lo = make_rational(205, 100), hi = make_rational(210, 100);
    for (auto& r : roots) {
        IsolatedRoot rr = refine_root(r, make_rational(1, 1000));
        if (rr.interval.lo >= lo && rr.interval.hi <= hi) {
            if (ustar) throw IntegrityError("multiple R60 roots in [2.05, 2.10]");
            ustar = rr;
        }
    }
    if (!ustar) throw IntegrityError("no R60 root in [2.05, 2.10]");
    *ustar = refine_root(*ustar, width);
    rd.u_star = ustar->interval;
    // smallest root of t^2 - u t + 1 is (u - sqrt(u^2 - 4))/2
    const Interval u = rd.u_star;
    const Interval disc = int_pow(u, 2) - Interval(4);
    rd.t_star = (u - interval_sqrt(disc, width)) / Interval(2);
    return rd;
}

// ---------------------------------------------------------------------------
// Optional cross-check: Q(s) = Res_t(H1, H2)
// ---------------------------------------------------------------------------

struct CrossCheckReport {
    UniPoly q2, q4, q120, q132;
    int real_q2 = 0, real_q4 = 0, real_q120 = 0, real_q132 = 0;
    int inS_q2 = 0, inS_q4 = 0, inS_q120 = 0, inS_q132 = 0;
};

namespace detail {

// Partner factor of p120 inside the squarefree cofactor of Q(s): the gcd of
// Q252 with Res_t(p120(t), H2(s,t)), computed from modular images (resultant
// by evaluation/interpolation, gcd mod p, CRT, exact division check).
inline UniPoly partner_factor(const UniPoly& Q252, const UniPoly& p120,
                              const BiPoly& H2, int expected_deg) {
    const int res_deg_bound = H2.degree1() * p120.degree();  // deg_s bound
    const Integer lcQ = Q252.leading();

    std::vector<Integer> acc;
    Integer modulus(1);
    int best_deg = expected_deg;
    const auto h2_slices = H2.coeffs_in_var2();  // UniPolys in s per t-degree
    for (std::uint64_t p : modp::prime_pool()) {
        const modp::Poly mq = modp::reduce(Q252, p);
        const modp::Poly mp120 = modp::reduce(p120, p);
        if (mq.size() != Q252.coeffs().size() || mp120.size() != p120.coeffs().size())
            continue;
        // evaluate Res_t(p120, H2(s0, t)) at s0 = 0..res_deg_bound
        const int n = res_deg_bound + 1;
        std::vector<std::uint64_t> xs(n), ys(n);
        std::vector<modp::Poly> slice_mod;
        slice_mod.reserve(h2_slices.size());
        for (const auto& sl : h2_slices) slice_mod.push_back(modp::reduce(sl, p));
        bool bad_prime = false;
        for (int i = 0; i < n && !bad_prime; ++i) {
            const std::uint64_t s0 = static_cast<std::uint64_t>(i);
            xs[i] = s0;
            modp::Poly ht(slice_mod.size());
            for (size_t k = 0; k < slice_mod.size(); ++k)
                ht[k] = modp::eval(slice_mod[k], s0, p);
            modp::trim(ht);
            if (ht.size() != slice_mod.size()) {
                // degree drop in t at this point; the interpolation degree
                // bound no longer applies cleanly -> skip the prime
                bad_prime = true;
                break;
            }
            ys[i] = modp::resultant(mp120, ht, p);
        }
        if (bad_prime) continue;
        // Newton interpolation
        std::vector<std::uint64_t> divided = ys;
        for (int level = 1; level < n; ++level)
            for (int i = n - 1; i >= level; --i) {
                const std::uint64_t num = modp::sub(divided[i], divided[i - 1], p);
                const std::uint64_t den = modp::sub(xs[i], xs[i - level], p);
                divided[i] = modp::mul(num, modp::inv(den, p), p);
            }
        modp::Poly rp{divided[n - 1]};
        for (int i = n - 2; i >= 0; --i) {
            // rp = rp * (x - xs[i]) + divided[i]
            modp::Poly nxt(rp.size() + 1, 0);
            for (size_t k = 0; k < rp.size(); ++k) {
                nxt[k + 1] = modp::add(nxt[k + 1], rp[k], p);
                nxt[k] = modp::sub(nxt[k], modp::mul(rp[k], xs[i], p), p);
            }
            nxt[0] = modp::add(nxt[0], divided[i], p);
            rp = std::move(nxt);
            modp::trim(rp);
        }
        modp::Poly g = modp::gcd(mq, rp, p);
        const int deg = static_cast<int>(g.size()) - 1;
        if (deg != best_deg) continue;  // unlucky prime
        const std::uint64_t scale = mpz_fdiv_ui(lcQ.get_mpz_t(), p);
        for (auto& cfe : g) cfe = modp::mul(cfe, scale, p);
        const Integer pz(static_cast<unsigned long>(p));
        if (modulus == 1) {
            acc.assign(deg + 1, Integer(0));
            for (int i = 0; i <= deg; ++i) acc[i] = static_cast<unsigned long>(g[i]);
            modulus = pz;
        } else {
            Integer inv_mod;
            mpz_invert(inv_mod.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            for (int i = 0; i <= deg; ++i) {
                Integer r = acc[i] % pz;
                if (r < 0) r += pz;
                Integer delta = (Integer(static_cast<unsigned long>(g[i])) - r) * inv_mod % pz;
                if (delta < 0) delta += pz;
                acc[i] += delta * modulus;
            }
            modulus *= pz;
        }
        std::vector<Integer> cand(acc.size());
        const Integer half = modulus / 2;
        for (size_t i = 0; i < acc.size(); ++i) {
            Integer v = acc[i] % modulus;
            if (v < 0) v += modulus;
            cand[i] = v > half ? Integer(v - modulus) : v;
        }
        UniPoly gz(std::move(cand), Q252.var());
        if (gz.is_zero() || gz.degree() != expected_deg) continue;
        gz = gz.primitive_part();
        if (divides(gz, Q252)) return gz;
    }
    throw CrossCheckMismatch("partner factor reconstruction did not stabilize");
}

}  // namespace detail

inline CrossCheckReport cross_check_Q(const ModelPolynomials& mp, const UniPoly& p120,
                                      const std::string& cache_dir = "") {
    UniPoly Q;
    std::filesystem::path cache_file;
    if (!cache_dir.empty()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(mp.data_digest));
        cache_file =
            std::filesystem::path(cache_dir) / ("elimination-q-" + std::string(buf) + ".txt");
        std::ifstream in(cache_file);
        if (in) Q = UniPoly::deserialize(in, "s");
    }
    if (Q.is_zero()) {
        auto rr = resultant(mp.H1, mp.H2, Eliminate::var2);
        Q = std::move(rr.primitive);
        if (!cache_file.empty()) {
            std::filesystem::create_directories(cache_file.parent_path());
            std::ofstream out(cache_file);
            Q.serialize(out);
        }
    }
    if (Q.degree() != 272) throw CrossCheckMismatch("Q degree != 272");

    CrossCheckReport rep;
    auto sqf = squarefree_decomposition(Q);
    UniPoly part1, part2, part6;
    for (auto& [f, mult] : sqf) {
        if (mult == 1)
            part1 = f;
        else if (mult == 2)
            part2 = f;
        else if (mult == 6)
            part6 = f;
        else
            throw CrossCheckMismatch("unexpected multiplicity " + std::to_string(mult));
    }
    if (part6.degree() != 2 || part2.degree() != 4 || part1.degree() != 252)
        throw CrossCheckMismatch("Q factor degree pattern");
    rep.q2 = part6;
    rep.q4 = part2;
    rep.q120 = detail::partner_factor(part1, p120, mp.H2, 120);
    rep.q132 = exact_divide(part1, rep.q120).primitive_part();
    if (rep.q132.degree() != 132) throw CrossCheckMismatch("q132 degree");

    const RootRange whole = RootRange::whole();
    rep.real_q2 = sturm_count(rep.q2, whole);
    rep.real_q4 = sturm_count(rep.q4, whole);
    rep.real_q120 = sturm_count(rep.q120, whole);
    rep.real_q132 = sturm_count(rep.q132, whole);

    // S = (sqrt(3)/3, (6+sqrt(3))/11): rational bracketing that is safe for
    // counting because no factor has a root between the bounds used here and
    // the true endpoints (verified by counting in the slack intervals).
    // sqrt(3)/3 = 0.57735026918962576...
    const Rational s_lo_out = make_rational(57735026918962576L, 100000000000000000L);
    const Rational s_lo_in = make_rational(57735026918962577L, 100000000000000000L);
    // (6+sqrt(3))/11 = 0.70248638810814779...
    const Rational s_hi_in = make_rational(70248638810814779L, 100000000000000000L);
    const Rational s_hi_out = make_rational(70248638810814780L, 100000000000000000L);
    const std::pair<const UniPoly*, int*> in_s[] = {{&rep.q2, &rep.inS_q2},
                                                    {&rep.q4, &rep.inS_q4},
                                                    {&rep.q120, &rep.inS_q120},
                                                    {&rep.q132, &rep.inS_q132}};
    for (const auto& [f, count] : in_s) {
        const int inner = sturm_count(*f, RootRange::open(s_lo_in, s_hi_in));
        const int outer = sturm_count(*f, RootRange::open(s_lo_out, s_hi_out));
        if (inner != outer)
            throw CrossCheckMismatch("root of a q-factor inside the S-endpoint slack");
        *count = inner;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Full classification
// ---------------------------------------------------------------------------

struct ClassificationCertificate {
    Rational precision;            // certification width
    std::uint64_t data_digest = 0;
    Integer P_content;
    int P_degree = 0;
    std::string p120_route;
    RemarkOneData remark1;
    std::vector<CandidateRoot> candidates;  // all 36, terminal states
    std::optional<CrossCheckReport> cross_check;
    long runtime_ms = 0;
};

struct ClassifyOptions {
    Rational precision = make_rational(1, Integer("1" + std::string(12, '0')));
    bool with_cross_check = false;
    std::string cache_dir;
};

inline ClassificationCertificate classify(const ModelPolynomials& mp,
                                          const ClassifyOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    ClassificationCertificate cert;
    cert.precision = opt.precision;
    cert.data_digest = mp.data_digest;

    auto er = eliminate(mp, opt.cache_dir);
    cert.P_degree = er.P.degree();
    cert.P_content = er.content;
    auto ex = extract_p120(er.C, mp);
    cert.p120_route = ex.route;

    // root-count integrity against the paper's Sturm table
    const RootRange whole = RootRange::whole();
    if (sturm_count(mp.p4, whole) != 4 || sturm_count(mp.q4, whole) != 4 ||
        sturm_count(ex.p120, whole) != 28 || sturm_count(ex.p132, whole) != 32)
        throw WrongRootCount("factor real-root totals");

    cert.remark1 = remark_one(ex.R60, make_rational(1, Integer("1" + std::string(12, '0'))));
    if (cert.remark1.r60_real_roots != 14) throw WrongRootCount("R60 real roots");

    cert.candidates = enumerate_candidates(mp.p4, mp.q4, ex.p120, ex.p132);
    PrecisionSchedule sched;
    sched.certify = opt.precision;
    if (sched.stop > sched.certify) sched.stop = sched.certify / 1000000;
    if (sched.start < sched.certify) sched.start = sched.certify;
    for (auto& c : cert.candidates) adjudicate(c, sched);
    for (const auto& c : cert.candidates) {
        if (c.state == CandState::Pending)
            throw IntegrityError("candidate left pending");
        if (c.state == CandState::Certified)
            for (const auto& e : c.residuals)
                if (!e.contains_zero())
                    throw IntegrityError("certified solution fails residual check");
    }

    // t* must land on the certified p120 root (Remark 1)
    for (const auto& c : cert.candidates)
        if (c.state == CandState::Certified && c.factor == "p120" &&
            !intersects(cert.remark1.t_star, c.t))
            throw IntegrityError("t* misses the certified p120 root interval");

    if (opt.with_cross_check)
        cert.cross_check = cross_check_Q(mp, ex.p120, opt.cache_dir);

    cert.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return cert;
}

}  // namespace pentacc

#endif
