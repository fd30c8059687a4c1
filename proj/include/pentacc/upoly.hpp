#ifndef PENTACC_UPOLY_HPP
#define PENTACC_UPOLY_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pentacc/interval.hpp"
#include "pentacc/rational.hpp"

namespace pentacc {

// Dense univariate polynomial over the integers, low degree first.
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::vector<Integer> coeffs, std::string var = "t")
        : c_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }
    UniPoly(std::initializer_list<long> coeffs, std::string var = "t") : var_(std::move(var)) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static UniPoly zero(std::string var = "t") { return UniPoly(std::move(var)); }
    static UniPoly constant(Integer v, std::string var = "t") {
        return UniPoly({std::move(v)}, std::move(var));
    }
    static UniPoly monomial(Integer coeff, int deg, std::string var = "t") {
        std::vector<Integer> c(deg + 1);
        c[deg] = std::move(coeff);
        return UniPoly(std::move(c), std::move(var));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }

    const Integer& operator[](int i) const {
        static const Integer kZero(0);
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : kZero;
    }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& leading() const { return c_.back(); }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    friend UniPoly operator-(const UniPoly& a) {
        std::vector<Integer> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = -a.c_[i];
        return UniPoly(std::move(r), a.var_);
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
        return UniPoly(std::move(r), a.var_.empty() ? b.var_ : a.var_);
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.var_.empty() ? b.var_ : a.var_);
        std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r), a.var_.empty() ? b.var_ : a.var_);
    }

    friend UniPoly operator*(const UniPoly& a, const Integer& k) {
        if (k == 0) return zero(a.var_);
        std::vector<Integer> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * k;
        return UniPoly(std::move(r), a.var_);
    }
    friend UniPoly operator*(const Integer& k, const UniPoly& a) { return a * k; }

    UniPoly derivative() const {
        if (c_.size() <= 1) return zero(var_);
        std::vector<Integer> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Integer(static_cast<long>(i));
        return UniPoly(std::move(r), var_);
    }

    // p(1/x) * x^deg
    UniPoly reversed() const {
        std::vector<Integer> r(c_.rbegin(), c_.rend());
        return UniPoly(std::move(r), var_);
    }

    bool is_reciprocal() const {
        if (is_zero()) return false;
        const int n = degree();
        for (int i = 0; 2 * i <= n; ++i)
            if (c_[i] != c_[n - i]) return false;
        return true;
    }

    // gcd of all coefficients, sign chosen so content * primitive == original
    Integer content() const {
        Integer g(0);
        for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (!is_zero() && sign(leading()) < 0) g = -g;
        return g;
    }

    UniPoly primitive_part() const {
        if (is_zero()) return *this;
        return divide_content(content());
    }

    UniPoly divide_content(const Integer& g) const {
        std::vector<Integer> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            Integer q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
            if (rem != 0) throw Error("content does not divide coefficient");
            r[i] = std::move(q);
        }
        return UniPoly(std::move(r), var_);
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc;
    }

    Integer eval(const Integer& x) const {
        Integer acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Exact sign of p(a/b) without building rationals: sign of sum c_i a^i b^(n-i).
    int sign_at(const Rational& x) const {
        if (is_zero()) return 0;
        const Integer& a = x.get_num();
        const Integer& b = x.get_den();
        Integer acc(0), bp(1);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * a + *it * bp;
            bp *= b;
        }
        return sign(acc);
    }

    Interval eval(const Interval& x) const {
        Interval acc(Rational(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + Interval(Rational(*it));
        return acc;
    }

    // one coefficient per line, low degree first
    void serialize(std::ostream& os) const {
        for (const auto& x : c_) os << x.get_str() << '\n';
    }
    std::string serialize() const {
        std::ostringstream ss;
        serialize(ss);
        return ss.str();
    }
    static UniPoly deserialize(std::istream& is, std::string var = "t") {
        std::vector<Integer> c;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            Integer v;
            if (mpz_set_str(v.get_mpz_t(), line.c_str(), 10) != 0)
                throw Error("bad coefficient line: " + line);
            c.push_back(std::move(v));
        }
        return UniPoly(std::move(c), std::move(var));
    }
    static UniPoly deserialize(const std::string& text, std::string var = "t") {
        std::istringstream ss(text);
        return deserialize(ss, std::move(var));
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
    std::string var_ = "t";
};

// Division over Q with the requirement that it is exact; quotient has
// rational coefficients cleared back to integers.
inline UniPoly exact_divide(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial();
    if (f.is_zero()) return UniPoly::zero(f.var());
    if (f.degree() < g.degree()) throw InexactDivision();
    std::vector<Rational> rem(f.coeffs().size());
    for (size_t i = 0; i < rem.size(); ++i) rem[i] = Rational(f[static_cast<int>(i)]);
    const int dq = f.degree() - g.degree();
    std::vector<Rational> q(dq + 1);
    const Rational glc{g.leading()};
    for (int k = dq; k >= 0; --k) {
        Rational coef = rem[k + g.degree()] / glc;
        q[k] = coef;
        if (coef != 0)
            for (int j = 0; j <= g.degree(); ++j) rem[k + j] -= coef * Rational(g[j]);
    }
    for (int j = 0; j < g.degree(); ++j)
        if (rem[j] != 0) throw InexactDivision();
    std::vector<Integer> qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) throw InexactDivision();
        qi[i] = q[i].get_num();
    }
    return UniPoly(std::move(qi), f.var());
}

inline bool divides(const UniPoly& g, const UniPoly& f) {
    try {
        exact_divide(f, g);
        return true;
    } catch (const InexactDivision&) {
        return false;
    }
}

// Pseudo-remainder scaled by |lc(g)|^(deg f - deg g + 1): a positive multiple
// of the true remainder, so sign-based uses (Sturm) are unaffected.
inline UniPoly pseudo_rem_abs(UniPoly f, const UniPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial();
    const Integer lc = abs(g.leading());
    while (!f.is_zero() && f.degree() >= g.degree()) {
        const int k = f.degree() - g.degree();
        const Integer flc = f.leading();
        f = f * lc - UniPoly::monomial(sign(g.leading()) >= 0 ? flc : -flc, k, f.var()) * g;
        if (!f.is_zero() && f.degree() == k + g.degree())
            throw Error("pseudo-division failed to reduce degree");
    }
    return f;
}

}  // namespace pentacc

#endif
