#ifndef PENTACC_MODGCD_HPP
#define PENTACC_MODGCD_HPP

#include <cstdint>
#include <vector>

#include "pentacc/upoly.hpp"

namespace pentacc {

// Univariate polynomial arithmetic over Z/p for a word-sized prime, used as
// the workhorse behind exact gcds of the big elimination cofactors.
namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t s = a + b;
    return s >= p || s < a ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

using Poly = std::vector<std::uint64_t>;  // low degree first, no trailing zeros

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly reduce(const UniPoly& f, std::uint64_t p) {
    Poly r(f.coeffs().size());
    const Integer pz(static_cast<unsigned long>(p));
    for (size_t i = 0; i < r.size(); ++i) {
        Integer m = f[static_cast<int>(i)] % pz;
        if (m < 0) m += pz;
        r[i] = mpz_get_ui(m.get_mpz_t());
    }
    trim(r);
    return r;
}

inline Poly monic(Poly f, std::uint64_t p) {
    if (f.empty()) return f;
    const std::uint64_t s = inv(f.back(), p);
    for (auto& c : f) c = mul(c, s, p);
    return f;
}

inline Poly rem(Poly f, const Poly& g, std::uint64_t p) {
    const std::uint64_t glc_inv = inv(g.back(), p);
    while (f.size() >= g.size()) {
        const std::uint64_t q = mul(f.back(), glc_inv, p);
        const size_t off = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) f[off + i] = sub(f[off + i], mul(q, g[i], p), p);
        trim(f);
        if (f.empty()) break;
    }
    return f;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    while (!b.empty()) {
        Poly r = rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a), p);
}

inline std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = add(mul(acc, x, p), *it, p);
    return acc;
}

// Resultant of two polynomials over Z/p via the Euclidean algorithm.
inline std::uint64_t resultant(Poly a, Poly b, std::uint64_t p) {
    if (a.empty() || b.empty()) return 0;
    std::uint64_t res = 1;
    while (true) {
        if (b.size() == 1) return mul(res, pow(b[0], a.size() - 1, p), p);
        Poly r = rem(a, b, p);
        if (r.empty()) return 0;
        const std::uint64_t degr = r.size() - 1, dega = a.size() - 1, degb = b.size() - 1;
        res = mul(res, pow(b.back(), dega - degr, p), p);
        if ((dega % 2) && (degb % 2)) res = p - res;
        a = std::move(b);
        b = std::move(r);
    }
}

inline const std::vector<std::uint64_t>& prime_pool() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> ps;
        Integer p = (Integer(1) << 62) + 1;
        for (int i = 0; i < 512; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            ps.push_back(mpz_get_ui(p.get_mpz_t()));
        }
        return ps;
    }();
    return primes;
}

}  // namespace modp

// Exact gcd over Z by modular images + CRT, verified by exact division.
// Result is primitive with positive leading coefficient.
inline UniPoly integer_poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    const UniPoly pa = a.primitive_part(), pb = b.primitive_part();
    const Integer lcg = gcd(pa.leading(), pb.leading());

    int best_deg = std::min(pa.degree(), pb.degree()) + 1;
    std::vector<Integer> acc;      // CRT accumulator, symmetric range
    Integer modulus(1);
    for (std::uint64_t p : modp::prime_pool()) {
        const modp::Poly ma = modp::reduce(pa, p), mb = modp::reduce(pb, p);
        if (ma.size() != pa.coeffs().size() || mb.size() != pb.coeffs().size())
            continue;  // prime divides a leading coefficient
        modp::Poly g = modp::gcd(ma, mb, p);
        const int deg = static_cast<int>(g.size()) - 1;
        if (deg == 0) return UniPoly::constant(1, a.var());
        if (deg > best_deg) continue;  // unlucky prime
        if (deg < best_deg) {          // all previous primes were unlucky
            best_deg = deg;
            acc.assign(deg + 1, Integer(0));
            modulus = 1;
        }
        // scale to expected leading coefficient image
        const std::uint64_t scale = mpz_fdiv_ui(lcg.get_mpz_t(), p);
        for (auto& c : g) c = modp::mul(c, scale, p);
        // CRT merge
        const Integer pz(static_cast<unsigned long>(p));
        Integer inv_mod;
        if (modulus == 1) {
            for (int i = 0; i <= deg; ++i) acc[i] = static_cast<unsigned long>(g[i]);
            modulus = pz;
        } else {
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
        // symmetric lift and trial division
        std::vector<Integer> cand(acc.size());
        const Integer half = modulus / 2;
        for (size_t i = 0; i < acc.size(); ++i) {
            Integer v = acc[i] % modulus;
            if (v < 0) v += modulus;
            cand[i] = v > half ? Integer(v - modulus) : v;
        }
        UniPoly gz(std::move(cand), a.var());
        if (gz.is_zero() || gz.degree() != best_deg) continue;
        gz = gz.primitive_part();
        if (divides(gz, pa) && divides(gz, pb)) return gz;
    }
    throw Error("modular gcd did not stabilize");
}

// Squarefree part p / gcd(p, p').
inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    const UniPoly g = integer_poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    return exact_divide(p.primitive_part(), g).primitive_part();
}

// Yun-style squarefree decomposition: returns (factor, multiplicity) pairs
// with multiplicities ascending; the product of factor^multiplicity equals
// the primitive part of p up to sign.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly w = p.primitive_part();
    int mult = 0;
    while (w.degree() > 0) {
        UniPoly g = integer_poly_gcd(w, w.derivative());
        UniPoly flat = g.degree() == 0 ? w : exact_divide(w, g).primitive_part();
        ++mult;
        // factors of multiplicity exactly `mult` in the original: flat / next flat
        if (g.degree() == 0) {
            out.emplace_back(flat, mult);
            break;
        }
        UniPoly g2 = integer_poly_gcd(g, g.derivative());
        UniPoly flat2 = g2.degree() == 0 ? g : exact_divide(g, g2).primitive_part();
        UniPoly exact = exact_divide(flat, integer_poly_gcd(flat, flat2)).primitive_part();
        if (exact.degree() > 0) out.emplace_back(exact, mult);
        w = g;
    }
    return out;
}

}  // namespace pentacc

#endif
