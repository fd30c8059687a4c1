#ifndef PENTACC_RESULTANT_HPP
#define PENTACC_RESULTANT_HPP

#include <utility>
#include <vector>

#include "pentacc/bpoly.hpp"
#include "pentacc/upoly.hpp"

namespace pentacc {

struct ResultantResult {
    UniPoly primitive;  // content-stripped, positive leading coefficient
    Integer content;    // signed: primitive * content == raw resultant
};

namespace detail {

// Fraction-free Bareiss determinant of a square matrix of integer
// polynomials. Every division is exact by construction.
inline UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m,
                                   const std::string& var) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return UniPoly::constant(1, var);
    int sgn = 1;
    UniPoly prev = UniPoly::constant(1, var);
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return UniPoly::zero(var);
            std::swap(m[k], m[swap_row]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = UniPoly::zero(var);
        }
        prev = m[k][k];
    }
    UniPoly det = m[n - 1][n - 1];
    return sgn < 0 ? -det : det;
}

inline std::vector<std::vector<UniPoly>> sylvester(const std::vector<UniPoly>& f,
                                                   const std::vector<UniPoly>& g,
                                                   const std::string& var) {
    // f, g are coefficient lists in the eliminated variable, low degree first
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(g.size()) - 1;
    const int N = m + n;
    std::vector<std::vector<UniPoly>> mat(N, std::vector<UniPoly>(N, UniPoly::zero(var)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) mat[r][r + i] = f[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) mat[n + r][r + i] = g[n - i];
    return mat;
}

}  // namespace detail

enum class Eliminate { var1, var2 };

// Resultant of f and g with respect to one variable, as a univariate
// polynomial in the other, via fraction-free Bareiss elimination on the
// Sylvester matrix.
inline ResultantResult resultant(const BiPoly& f, const BiPoly& g, Eliminate which) {
    if (f.is_zero() || g.is_zero()) throw DegenerateInput("resultant of zero polynomial");
    std::vector<UniPoly> fc, gc;
    std::string var;
    if (which == Eliminate::var1) {
        if (f.degree1() <= 0 || g.degree1() <= 0)
            throw DegenerateInput("degree 0 in eliminated variable");
        fc = f.coeffs_in_var1();
        gc = g.coeffs_in_var1();
        var = f.var2();
    } else {
        if (f.degree2() <= 0 || g.degree2() <= 0)
            throw DegenerateInput("degree 0 in eliminated variable");
        fc = f.coeffs_in_var2();
        gc = g.coeffs_in_var2();
        var = f.var1();
    }
    UniPoly det = detail::bareiss_determinant(detail::sylvester(fc, gc, var), var);
    if (det.is_zero()) return {UniPoly::zero(var), Integer(0)};
    const Integer c = det.content();
    return {det.divide_content(c), c};
}

}  // namespace pentacc

#endif
