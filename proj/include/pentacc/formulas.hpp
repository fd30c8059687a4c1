#ifndef PENTACC_FORMULAS_HPP
#define PENTACC_FORMULAS_HPP

#include "pentacc/formulas_gen.hpp"

namespace pentacc::formulas {

// h2 = (1-4x3)^2 (1+4y5^2) + 4y5^2 (4y5^2 - 15)
template <typename T>
T h2(const T& x3, const T& y5) {
    const T one(1);
    const T a = one - T(4) * x3;
    const T y2 = y5 * y5;
    return a * a * (one + T(4) * y2) + T(4) * y2 * (T(4) * y2 - T(15));
}

// g3 = (8 + E3 lam) y5 (L2 lam - L1)
template <typename T>
T g3(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam) {
    return (T(8) + E3 * lam) * y5 *
           (L2(x3, y5, E1, E2, E3) * lam - L1(x3, y5, E1, E2, E3));
}

// g4 = (1 + lam)(2 y5 - E2)(L2 lam - L1)
template <typename T>
T g4(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam) {
    return (T(1) + lam) * (T(2) * y5 - E2) *
           (L2(x3, y5, E1, E2, E3) * lam - L1(x3, y5, E1, E2, E3));
}

// numerators of the mass expressions; masses are these over mass_den
template <typename T>
T m1_num(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam) {
    const T op = T(1) + lam;
    return T(2) * E1 * E3 * op * op * x3 * x3 * x3 * (E2 - T(2) * y5);
}

template <typename T>
T m3_num(const T& x3, const T& y5, const T& E1, const T& E2, const T& E3, const T& lam) {
    return T(4) * E1 * (T(1) + lam) * (T(8) + E3 * lam) * x3 * x3 * x3 * y5;
}

}  // namespace pentacc::formulas

#endif
