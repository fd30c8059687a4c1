#ifndef PENTACC_MODEL_HPP
#define PENTACC_MODEL_HPP

#include <array>

#include "pentacc/formulas.hpp"
#include "pentacc/interval.hpp"

namespace pentacc {

enum class Branch { plus, minus };
enum class Shape { convex, concave, degenerate };

inline const char* to_cstr(Branch b) { return b == Branch::plus ? "plus" : "minus"; }
inline const char* to_cstr(Shape s) {
    switch (s) {
        case Shape::convex: return "convex";
        case Shape::concave: return "concave";
        default: return "degenerate";
    }
}

// Symmetric equilateral pentagon: bodies at (1/2,0), (-1/2,0), (x3,y3),
// (-x3,y3), (0,y5); all fields are sound enclosures.
struct PentagonGeometry {
    Interval y5;
    Branch branch = Branch::plus;
    Interval x3, y3, E1, E2, E3;
    Shape shape = Shape::degenerate;
};

struct MassSolution {
    Interval lambda;  // the multiplier, lambda_2 = L1/L2
    Interval m1;      // = m2
    Interval m3;      // = m4
    Interval m5;      // = 1 - 2 m1 - 2 m3
};

namespace detail {

// y5 < sqrt(15)/2 ?  (both sides positive, compare squares)
inline bool below_sqrt15_half(const Rational& y5) {
    return y5 * y5 * 4 < 15;
}
// y5 > 1 + sqrt(3)/2 ?
inline bool above_one_plus_sqrt3_half(const Rational& y5) {
    if (y5 <= 1) return false;
    const Rational d = y5 - 1;
    return d * d * 4 > 3;
}
// y5 vs sqrt(3)/2: -1 below, +1 above (equality impossible for rationals)
inline int cmp_sqrt3_half(const Rational& y5) {
    if (sign(y5) <= 0) return -1;
    return y5 * y5 * 4 < 3 ? -1 : 1;
}

}  // namespace detail

// x3 = 1/4 +- (y5/2) Phi(y5) without domain validation; used both by
// geometry_from_y5 and by the discard bookkeeping for invalid candidates.
inline Interval x3_enclosure(const Interval& y5, Branch branch,
                             const Rational& sqrt_width) {
    const Interval y2 = int_pow(y5, 2);
    const Interval phi2 = (Interval(15) - Interval(4) * y2) / (Interval(1) + Interval(4) * y2);
    const Interval phi = interval_sqrt(phi2, sqrt_width);
    const Interval off = y5 * phi / Interval(2);
    const Interval quarter{make_rational(1, 4)};
    return branch == Branch::plus ? quarter + off : quarter - off;
}

inline Interval y3_enclosure(const Interval& y5, Branch branch,
                             const Rational& sqrt_width) {
    const Interval y2 = int_pow(y5, 2);
    const Interval phi2 = (Interval(15) - Interval(4) * y2) / (Interval(1) + Interval(4) * y2);
    const Interval phi = interval_sqrt(phi2, sqrt_width);
    const Interval off = phi / Interval(4);
    const Interval half = y5 / Interval(2);
    return branch == Branch::plus ? half + off : half - off;
}

inline PentagonGeometry geometry_from_y5(const Interval& y5, Branch branch,
                                         const Rational& sqrt_width = make_rational(
                                             1, Integer("1" + std::string(40, '0')))) {
    if (sign(y5.lo) < 0) throw OutOfBranchDomain();
    if (y5.is_point() && sign(y5.lo) == 0) throw DegeneratePentagon("y5 = 0");
    if (sign(y5.lo) == 0) throw OutOfBranchDomain();
    if (!detail::below_sqrt15_half(y5.hi)) throw OutOfBranchDomain();
    if (branch == Branch::minus && !detail::above_one_plus_sqrt3_half(y5.lo))
        throw OutOfBranchDomain();

    PentagonGeometry g;
    g.y5 = y5;
    g.branch = branch;
    g.x3 = x3_enclosure(y5, branch, sqrt_width);
    g.y3 = y3_enclosure(y5, branch, sqrt_width);
    if (branch == Branch::plus && !y5.is_point()) {
        // Psi+ is monotone on each side of y5 = sqrt(3)/2, so the hull of the
        // endpoint evaluations is a sound and tighter enclosure there.
        const int clo = detail::cmp_sqrt3_half(y5.lo), chi = detail::cmp_sqrt3_half(y5.hi);
        if (clo == chi) {
            const Interval a = x3_enclosure(Interval(y5.lo), branch, sqrt_width);
            const Interval b = x3_enclosure(Interval(y5.hi), branch, sqrt_width);
            const Interval tight = hull(a, b);
            g.x3 = Interval(std::max(g.x3.lo, tight.lo), std::min(g.x3.hi, tight.hi));
        }
    }
    if (sign(g.x3.hi) <= 0)
        throw DegeneratePentagon("x3 enclosure nonpositive: " + to_string(g.x3));

    g.E1 = interval_sqrt(Interval(1) + Interval(2) * g.x3, sqrt_width);
    g.E2 = interval_sqrt(Interval(3) + Interval(4) * g.x3 - Interval(4) * int_pow(g.x3, 2),
                         sqrt_width);
    g.E3 = pow_3_2(Interval(1) + Interval(4) * int_pow(y5, 2), sqrt_width);

    if (branch == Branch::minus) {
        g.shape = Shape::concave;
    } else {
        const int clo = detail::cmp_sqrt3_half(y5.lo), chi = detail::cmp_sqrt3_half(y5.hi);
        if (chi < 0)
            g.shape = Shape::concave;
        else if (clo > 0)
            g.shape = Shape::convex;
        else
            g.shape = Shape::degenerate;  // undecided at this width
    }
    return g;
}

// lambda = L1/L2 and the masses of Eq. eq:m1m3; m5 = 1 - 2 m1 - 2 m3.
struct MassInternals {
    Interval L1, L2, mass_den;
};

inline MassSolution solve_masses(const PentagonGeometry& g,
                                 MassInternals* internals = nullptr) {
    const Interval L1 = formulas::L1(g.x3, g.y5, g.E1, g.E2, g.E3);
    const Interval L2 = formulas::L2(g.x3, g.y5, g.E1, g.E2, g.E3);
    if (L2.contains_zero()) throw SingularDenominator("L2 " + to_string(L2));
    MassSolution ms;
    ms.lambda = L1 / L2;
    const Interval md = formulas::mass_den(g.x3, g.y5, g.E1, g.E2, g.E3, ms.lambda);
    if (md.contains_zero()) throw SingularDenominator("m " + to_string(md));
    if (internals) *internals = {L1, L2, md};
    ms.m1 = formulas::m1_num(g.x3, g.y5, g.E1, g.E2, g.E3, ms.lambda) / md;
    ms.m3 = formulas::m3_num(g.x3, g.y5, g.E1, g.E2, g.E3, ms.lambda) / md;
    ms.m5 = Interval(1) - Interval(2) * ms.m1 - Interval(2) * ms.m3;
    return ms;
}

inline Interval h1_eval(const PentagonGeometry& g) {
    return formulas::h1(g.x3, g.y5, g.E1, g.E2, g.E3);
}

template <typename T>
T h2_eval(const T& x3, const T& y5) {
    return formulas::h2(x3, y5);
}

// The ten central-configuration equations: sum_j m_j (q_j - q_i)/r_ij^3
// = lambda (q_i - c_m), x-components for bodies 1..5 first, then the
// y-components. Masses are per-body to support the symmetry identities.
inline std::array<Interval, 10> cc_residuals_general(
    const Interval& x3, const Interval& y3, const Interval& y5,
    const std::array<Interval, 5>& m, const Interval& lambda,
    const Rational& sqrt_width = make_rational(1, Integer("1" + std::string(40, '0')))) {
    const Interval half{make_rational(1, 2)};
    const std::array<std::array<Interval, 2>, 5> q = {{{half, Interval(0)},
                                                       {-half, Interval(0)},
                                                       {x3, y3},
                                                       {-x3, y3},
                                                       {Interval(0), y5}}};
    Interval M(0), cx(0), cy(0);
    for (int i = 0; i < 5; ++i) {
        M += m[i];
        cx += m[i] * q[i][0];
        cy += m[i] * q[i][1];
    }
    cx = cx / M;
    cy = cy / M;

    std::array<Interval, 10> e{};
    for (int i = 0; i < 5; ++i) {
        Interval ax(0), ay(0);
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            const Interval dx = q[j][0] - q[i][0];
            const Interval dy = q[j][1] - q[i][1];
            const Interval r2 = int_pow(dx, 2) + int_pow(dy, 2);
            const Interval r3 = pow_3_2(r2, sqrt_width);
            ax += m[j] * dx / r3;
            ay += m[j] * dy / r3;
        }
        e[i] = ax - lambda * (q[i][0] - cx);
        e[i + 5] = ay - lambda * (q[i][1] - cy);
    }
    return e;
}

inline std::array<Interval, 10> cc_residuals(const PentagonGeometry& g,
                                             const MassSolution& ms) {
    return cc_residuals_general(g.x3, g.y3, g.y5, {ms.m1, ms.m1, ms.m3, ms.m3, ms.m5},
                                ms.lambda);
}

}  // namespace pentacc

#endif
