#ifndef PENTACC_RATFUN_HPP
#define PENTACC_RATFUN_HPP

#include <array>
#include <climits>
#include <map>
#include <string>
#include <utility>

#include "pentacc/bpoly.hpp"
#include "pentacc/interval.hpp"

namespace pentacc {

namespace detail {
inline Rational ratfun_div(const Rational& a, const Rational& b) {
    if (b == 0) throw DenominatorZero();
    return a / b;
}
inline Interval ratfun_div(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DenominatorZero();
    return a / b;
}
}  // namespace detail

// Bivariate rational function in (s, t) whose denominator is a monomial in
// the five atoms below. Tracking the denominator as an exponent vector keeps
// all divisions exact and avoids a general bivariate gcd.
class RatFun2 {
   public:
    // atom order: 2, t, (5s^2-4s+1), s, (2s-1)
    static constexpr int kAtoms = 5;
    using Exps = std::array<int, kAtoms>;

    RatFun2() : num_(BiPoly::zero()), e_{} {}
    RatFun2(long v) : num_(BiPoly::constant(Integer(v))), e_{} {}  // NOLINT: ring literal
    explicit RatFun2(const Integer& v) : num_(BiPoly::constant(v)), e_{} {}
    explicit RatFun2(BiPoly num, Exps den = {}) : num_(std::move(num)), e_(den) {
        reduce();
    }

    const BiPoly& num() const { return num_; }
    const Exps& den_exponents() const { return e_; }
    bool is_zero() const { return num_.is_zero(); }

    static const BiPoly& atom(int i) {
        static const std::array<BiPoly, kAtoms> atoms = [] {
            std::array<BiPoly, kAtoms> a;
            a[0] = BiPoly::constant(2);
            a[1] = BiPoly::monomial(1, 0, 1);  // t
            BiPoly q;                           // 5s^2 - 4s + 1
            q.set(2, 0, 5);
            q.set(1, 0, -4);
            q.set(0, 0, 1);
            a[2] = q;
            a[3] = BiPoly::monomial(1, 1, 0);  // s
            BiPoly l;                           // 2s - 1
            l.set(1, 0, 2);
            l.set(0, 0, -1);
            a[4] = l;
            return a;
        }();
        return atoms[i];
    }

    friend RatFun2 operator-(const RatFun2& a) { return RatFun2::raw(-a.num_, a.e_); }

    friend RatFun2 operator+(const RatFun2& a, const RatFun2& b) {
        Exps ce;
        BiPoly na = a.num_, nb = b.num_;
        for (int i = 0; i < kAtoms; ++i) {
            ce[i] = std::max(a.e_[i], b.e_[i]);
            for (int k = a.e_[i]; k < ce[i]; ++k) na = na * atom(i);
            for (int k = b.e_[i]; k < ce[i]; ++k) nb = nb * atom(i);
        }
        return RatFun2(na + nb, ce);
    }
    friend RatFun2 operator-(const RatFun2& a, const RatFun2& b) { return a + (-b); }
    friend RatFun2 operator*(const RatFun2& a, const RatFun2& b) {
        Exps ce;
        for (int i = 0; i < kAtoms; ++i) ce[i] = a.e_[i] + b.e_[i];
        return RatFun2(a.num_ * b.num_, ce);
    }

    RatFun2 pow(int n) const {
        RatFun2 r(1);
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    // divide by one tracked atom (exactly representable: bump the exponent)
    RatFun2 div_atom(int i, int power = 1) const {
        Exps e = e_;
        e[i] += power;
        return RatFun2(num_, e);
    }

    template <typename T>
    T eval(const T& s0, const T& t0) const {
        T den(1);
        const T two(2), one(1);
        for (int k = 0; k < e_[0]; ++k) den = den * two;
        for (int k = 0; k < e_[1]; ++k) den = den * t0;
        if (e_[2] > 0) {
            const T q = T(5) * s0 * s0 - T(4) * s0 + one;
            for (int k = 0; k < e_[2]; ++k) den = den * q;
        }
        for (int k = 0; k < e_[3]; ++k) den = den * s0;
        if (e_[4] > 0) {
            const T l = two * s0 - one;
            for (int k = 0; k < e_[4]; ++k) den = den * l;
        }
        return detail::ratfun_div(num_.eval(s0, t0), den);
    }

   private:
    static RatFun2 raw(BiPoly num, Exps e) {
        RatFun2 r;
        r.num_ = std::move(num);
        r.e_ = e;
        return r;
    }

    void reduce() {
        if (num_.is_zero()) {
            e_ = {};
            return;
        }
        while (e_[0] > 0 && all_coeffs_even()) {
            BiPoly half;
            for (const auto& [k, v] : num_.terms()) half.set(k.first, k.second, v / 2);
            num_ = std::move(half);
            --e_[0];
        }
        while (e_[1] > 0 && min_deg2() >= 1) {
            BiPoly shifted;
            for (const auto& [k, v] : num_.terms()) shifted.set(k.first, k.second - 1, v);
            num_ = std::move(shifted);
            --e_[1];
        }
        while (e_[3] > 0 && min_deg1() >= 1) {
            BiPoly shifted;
            for (const auto& [k, v] : num_.terms()) shifted.set(k.first - 1, k.second, v);
            num_ = std::move(shifted);
            --e_[3];
        }
        for (int i : {2, 4}) {
            while (e_[i] > 0) {
                BiPoly q;
                if (!try_divide_s_poly(atom(i), q)) break;
                num_ = std::move(q);
                --e_[i];
            }
        }
    }

    bool all_coeffs_even() const {
        for (const auto& [k, v] : num_.terms())
            if (mpz_odd_p(v.get_mpz_t())) return false;
        return true;
    }
    int min_deg1() const {
        int m = INT_MAX;
        for (const auto& [k, v] : num_.terms()) m = std::min(m, k.first);
        return m;
    }
    int min_deg2() const {
        int m = INT_MAX;
        for (const auto& [k, v] : num_.terms()) m = std::min(m, k.second);
        return m;
    }

    // attempt exact division by a polynomial in s alone, slice by t-degree
    bool try_divide_s_poly(const BiPoly& d, BiPoly& out) const {
        UniPoly ds("s");
        {
            std::vector<Integer> c(d.degree1() + 1);
            for (const auto& [k, v] : d.terms()) c[k.first] = v;
            ds = UniPoly(std::move(c), "s");
        }
        std::vector<UniPoly> slices = num_.coeffs_in_var2();
        BiPoly result(num_.var1(), num_.var2());
        for (int td = 0; td < static_cast<int>(slices.size()); ++td) {
            if (slices[td].is_zero()) continue;
            UniPoly q;
            try {
                q = exact_divide(slices[td], ds);
            } catch (const InexactDivision&) {
                return false;
            }
            for (int i = 0; i <= q.degree(); ++i) result.set(i, td, q[i]);
        }
        out = std::move(result);
        return true;
    }

    BiPoly num_;
    Exps e_;
};

// Apply a polynomial expression in the model symbols to RatFun2 bindings.
// The expression is supplied as a callable over a generic scalar; bindings
// must cover x3, y5, E1, E2, E3.
template <typename ExprFn>
RatFun2 ratfun_compose(ExprFn&& expr, const std::map<std::string, RatFun2>& bindings) {
    for (const char* sym : {"x3", "y5", "E1", "E2", "E3"})
        if (bindings.find(sym) == bindings.end()) throw UnboundSymbol(sym);
    return expr(bindings.at("x3"), bindings.at("y5"), bindings.at("E1"),
                bindings.at("E2"), bindings.at("E3"));
}

// Sound/exact evaluation wrappers matching the eval2 contract.
inline Rational eval2(const RatFun2& f, const Rational& s0, const Rational& t0) {
    return f.eval(s0, t0);
}
inline Interval eval2(const RatFun2& f, const Interval& s0, const Interval& t0) {
    return f.eval(s0, t0);
}
template <typename T>
T eval2(const BiPoly& f, const T& s0, const T& t0) {
    return f.eval(s0, t0);
}

}  // namespace pentacc

#endif
