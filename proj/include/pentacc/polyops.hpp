#ifndef PENTACC_POLYOPS_HPP
#define PENTACC_POLYOPS_HPP

#include <utility>
#include <vector>

#include "pentacc/upoly.hpp"

namespace pentacc {

// Exact square root of a perfect-square polynomial, leading coefficient
// normalized positive. Coefficients are solved from the top down and the
// result is verified by one exact multiplication.
inline UniPoly poly_square_root(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() % 2 != 0) throw NotPerfectSquare();
    const int m = p.degree() / 2;
    if (sign(p.leading()) < 0) throw NotPerfectSquare();
    const Integer lc = floor_sqrt(p.leading());
    if (lc * lc != p.leading()) throw NotPerfectSquare();

    std::vector<Rational> q(m + 1);
    q[m] = Rational(lc);
    for (int k = m - 1; k >= 0; --k) {
        // coefficient of x^(m+k) in q^2: 2 q_m q_k + sum_{i+j=m+k, i,j<m} q_i q_j
        Rational acc(0);
        for (int i = k + 1; i <= m - 1; ++i) {
            const int j = m + k - i;
            if (j <= m - 1 && j > i) acc += 2 * q[i] * q[j];
            if (j == i) acc += q[i] * q[i];
        }
        q[k] = (Rational(p[m + k]) - acc) / (2 * q[m]);
    }
    std::vector<Integer> qi(m + 1);
    for (int i = 0; i <= m; ++i) {
        if (q[i].get_den() != 1) throw NotPerfectSquare();
        qi[i] = q[i].get_num();
    }
    UniPoly root(std::move(qi), p.var());
    if (root * root != p) throw NotPerfectSquare();
    return root;
}

// x^m * r(x + 1/x) expanded as a polynomial of degree 2m; the inverse of
// reciprocal_reduce.
inline UniPoly reciprocal_recompose(const UniPoly& r, std::string var = "t") {
    if (r.is_zero()) return UniPoly::zero(std::move(var));
    const int m = r.degree();
    UniPoly acc = UniPoly::zero(var);
    UniPoly x2p1({1, 0, 1}, var);  // x^2 + 1
    for (int k = 0; k <= m; ++k) {
        // r_k * x^(m-k) * (x^2+1)^k
        UniPoly term = UniPoly::monomial(r[k], m - k, var);
        for (int j = 0; j < k; ++j) term = term * x2p1;
        acc = acc + term;
    }
    return acc;
}

// Degree-halving reduction of a reciprocal polynomial of even degree 2m:
// returns r of degree m with p(x) = x^m r(x + 1/x). Coefficients of r come
// out integral by a triangular elimination from the top coefficient down.
inline UniPoly reciprocal_reduce(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() % 2 != 0) throw OddDegree();
    if (!p.is_reciprocal()) throw NotReciprocal();
    const int m = p.degree() / 2;
    // residual holds the upper coefficients p_{m..2m} minus the handled terms
    std::vector<Integer> residual(m + 1);
    for (int i = 0; i <= m; ++i) residual[i] = p[m + i];
    std::vector<Integer> r(m + 1);
    // binom row for (x^2+1)^k contributions to exponents m+k, m+k-2, ...
    for (int k = m; k >= 0; --k) {
        r[k] = residual[k];
        if (r[k] == 0) continue;
        // subtract r_k * x^(m-k) (x^2+1)^k from the residual (upper half only)
        Integer binom(1);
        for (int j = 0; j <= k; ++j) {
            const int expo = m + k - 2 * j;  // term x^expo with coefficient C(k,j)
            if (expo >= m) residual[expo - m] -= r[k] * binom;
            binom = binom * (k - j) / (j + 1);
        }
    }
    for (const auto& v : residual)
        if (v != 0) throw NotReciprocal();
    UniPoly out(std::move(r), "u");
    // cross-check: recomposition must reproduce p exactly
    if (reciprocal_recompose(out, p.var()) != p)
        throw NotReciprocal();
    return out;
}

// Res_x(f, x^2 - u x + 1) as a polynomial in u, via Horner reduction of f
// modulo the monic quadratic: value A(u) x + B(u) gives A^2 + A B u + B^2.
inline UniPoly resultant_with_symmetric_quadratic(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    UniPoly a = UniPoly::zero("u"), b = UniPoly::zero("u");
    const UniPoly u = UniPoly::monomial(1, 1, "u");
    for (int i = f.degree(); i >= 0; --i) {
        // multiply (a x + b) by x, reduce x^2 -> u x - 1, then add f_i
        UniPoly na = a * u + b;
        UniPoly nb = UniPoly::constant(f[i], "u") - a;
        a = std::move(na);
        b = std::move(nb);
    }
    return a * a + a * b * u + b * b;
}

}  // namespace pentacc

#endif
