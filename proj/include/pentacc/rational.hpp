#ifndef PENTACC_RATIONAL_HPP
#define PENTACC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "pentacc/errors.hpp"

namespace pentacc {

// Exact unbounded integers and rationals. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the RationalScalar
// contract, so we use it directly instead of wrapping it.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer floor_to_integer(const Rational& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline Integer ceil_to_integer(const Rational& q) {
    return ceil_div(q.get_num(), q.get_den());
}

// floor(sqrt(n)), n >= 0
inline Integer floor_sqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Integer ceil_sqrt(const Integer& n) {
    Integer r = floor_sqrt(n);
    if (r * r != n) r += 1;
    return r;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational r;
    const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), ae);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), ae);
    if (e < 0) {
        if (base == 0) throw Error("zero to a negative power");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    return r;
}

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw Error("cannot parse rational: " + text);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// Decimal rendering with `digits` digits after the point, rounded toward
// -inf (floor) or +inf (ceil) so interval endpoints stay outward.
inline std::string decimal_floor(const Rational& q, int digits) {
    const Integer scale = pow_int(Integer(10), static_cast<unsigned long>(digits));
    Integer n = floor_to_integer(Rational(q * scale));
    const bool neg = n < 0;
    Integer a = abs(n);
    std::string ds = a.get_str();
    if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    return (neg ? "-" : "") + ds;
}

inline std::string decimal_ceil(const Rational& q, int digits) {
    const Integer scale = pow_int(Integer(10), static_cast<unsigned long>(digits));
    Integer n = ceil_to_integer(Rational(q * scale));
    const bool neg = n < 0;
    Integer a = abs(n);
    std::string ds = a.get_str();
    if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    return (neg ? "-" : "") + ds;
}

}  // namespace pentacc

#endif
