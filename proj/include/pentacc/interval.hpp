#ifndef PENTACC_INTERVAL_HPP
#define PENTACC_INTERVAL_HPP

#include <algorithm>
#include <string>

#include "pentacc/rational.hpp"

namespace pentacc {

// Closed interval with exact rational endpoints. Every operation returns an
// interval containing the exact image of its inputs; endpoints stay rational.
struct Interval {
    Rational lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(const Rational& v) : lo(v), hi(v) {}  // NOLINT: implicit by design
    Interval(long v) : lo(v), hi(v) {}             // NOLINT
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error("interval endpoints out of order");
    }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    // 0 if the interval straddles (or touches) zero
    int certain_sign() const {
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        return 0;
    }
};

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

inline Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DivisionByIntervalContainingZero();
    Rational p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }

inline Interval int_pow(const Interval& a, long e) {
    if (e < 0) return Interval(1) / int_pow(a, -e);
    if (e == 0) return Interval(1);
    if (e % 2 == 1 || sign(a.lo) >= 0)
        return {pow_rational(a.lo, e), pow_rational(a.hi, e)};
    if (sign(a.hi) <= 0)
        return {pow_rational(a.hi, e), pow_rational(a.lo, e)};
    // even power of an interval straddling zero
    return {Rational(0), std::max(pow_rational(a.lo, e), pow_rational(a.hi, e))};
}

inline bool intersects(const Interval& a, const Interval& b) {
    return !(a.hi < b.lo || b.hi < a.lo);
}

inline Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

namespace detail {
// Directed square root of a rational: lo rounded down, hi rounded up, each
// within 1/scale of the exact value. Denominators stay bounded by scale.
inline Rational sqrt_lower(const Rational& x, const Integer& scale) {
    // floor(sqrt(x * scale^2)) / scale <= sqrt(x)
    Integer m = floor_div(x.get_num() * scale * scale, x.get_den());
    return make_rational(floor_sqrt(m), scale);
}

inline Rational sqrt_upper(const Rational& x, const Integer& scale) {
    Integer m = ceil_div(x.get_num() * scale * scale, x.get_den());
    return make_rational(ceil_sqrt(m), scale);
}
}  // namespace detail

// Sound enclosure of sqrt over `a`; the result is at most `width_bound`
// wider than the exact image.
inline Interval interval_sqrt(const Interval& a, const Rational& width_bound) {
    if (sign(a.lo) < 0) throw NegativeRadicand("sqrt of " + to_string(a.lo));
    if (sign(width_bound) <= 0) throw Error("width bound must be positive");
    // Each endpoint is off by < 1/scale, so the total slack is < width_bound.
    const Integer scale = ceil_to_integer(Rational(2 / width_bound)) + 1;
    Rational lo = detail::sqrt_lower(a.lo, scale);
    Rational hi = detail::sqrt_upper(a.hi, scale);
    if (sign(lo) < 0) lo = 0;
    return {lo, hi};
}

// (x)^(3/2) enclosure, used for E3 = (1 + 4 y5^2)^(3/2).
inline Interval pow_3_2(const Interval& a, const Rational& width_bound) {
    return interval_sqrt(int_pow(a, 3), width_bound);
}

inline std::string to_string(const Interval& a) {
    return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "]";
}

}  // namespace pentacc

#endif
