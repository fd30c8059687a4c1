#ifndef PENTACC_BPOLY_HPP
#define PENTACC_BPOLY_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pentacc/interval.hpp"
#include "pentacc/rational.hpp"
#include "pentacc/upoly.hpp"

namespace pentacc {

// Sparse bivariate polynomial over the integers. Exponent pairs are
// (deg in first variable, deg in second variable); zero coefficients are
// never stored.
class BiPoly {
   public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, Integer>;

    BiPoly() = default;
    BiPoly(std::string var1, std::string var2)
        : v1_(std::move(var1)), v2_(std::move(var2)) {}

    static BiPoly zero(std::string var1 = "s", std::string var2 = "t") {
        return BiPoly(std::move(var1), std::move(var2));
    }
    static BiPoly constant(Integer v, std::string var1 = "s", std::string var2 = "t") {
        BiPoly p(std::move(var1), std::move(var2));
        p.set(0, 0, std::move(v));
        return p;
    }
    static BiPoly monomial(Integer coeff, int d1, int d2, std::string var1 = "s",
                           std::string var2 = "t") {
        BiPoly p(std::move(var1), std::move(var2));
        p.set(d1, d2, std::move(coeff));
        return p;
    }
    // lift a univariate polynomial in the first / second variable
    static BiPoly from_var1(const UniPoly& f, std::string var2 = "t") {
        BiPoly p(f.var(), std::move(var2));
        for (int i = 0; i <= f.degree(); ++i) p.set(i, 0, f[i]);
        return p;
    }
    static BiPoly from_var2(const UniPoly& f, std::string var1 = "s") {
        BiPoly p(std::move(var1), f.var());
        for (int i = 0; i <= f.degree(); ++i) p.set(0, i, f[i]);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const std::string& var1() const { return v1_; }
    const std::string& var2() const { return v2_; }
    const Map& terms() const { return c_; }

    void set(int d1, int d2, Integer v) {
        if (v == 0)
            c_.erase({d1, d2});
        else
            c_[{d1, d2}] = std::move(v);
    }
    const Integer& coeff(int d1, int d2) const {
        static const Integer kZero(0);
        auto it = c_.find({d1, d2});
        return it == c_.end() ? kZero : it->second;
    }

    int degree1() const {
        int d = -1;
        for (const auto& [k, v] : c_) d = std::max(d, k.first);
        return d;
    }
    int degree2() const {
        int d = -1;
        for (const auto& [k, v] : c_) d = std::max(d, k.second);
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
        return d;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r(a.v1_, a.v2_);
        for (const auto& [k, v] : a.c_) r.c_[k] = -v;
        return r;
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, v] : b.c_) {
            auto [it, fresh] = r.c_.try_emplace(k, v);
            if (!fresh) {
                it->second += v;
                if (it->second == 0) r.c_.erase(it);
            }
        }
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r(a.v1_.empty() ? b.v1_ : a.v1_, a.v2_.empty() ? b.v2_ : a.v2_);
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_) {
                const Key k{ka.first + kb.first, ka.second + kb.second};
                auto [it, fresh] = r.c_.try_emplace(k, va * vb);
                if (!fresh) it->second += va * vb;
            }
        for (auto it = r.c_.begin(); it != r.c_.end();)
            it = it->second == 0 ? r.c_.erase(it) : std::next(it);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const Integer& k) {
        BiPoly r(a.v1_, a.v2_);
        if (k == 0) return r;
        for (const auto& [key, v] : a.c_) r.c_[key] = v * k;
        return r;
    }
    friend BiPoly operator*(const Integer& k, const BiPoly& a) { return a * k; }

    // gcd of all coefficients, signed so content * primitive == original
    Integer content() const {
        Integer g(0);
        for (const auto& [k, v] : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (!is_zero() && sign(c_.rbegin()->second) < 0) g = -g;
        return g;
    }
    BiPoly primitive_part() const {
        if (is_zero()) return *this;
        const Integer g = content();
        BiPoly r(v1_, v2_);
        for (const auto& [k, v] : c_) {
            Integer q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
            if (rem != 0) throw Error("content does not divide coefficient");
            r.c_[k] = std::move(q);
        }
        return r;
    }

    // coefficients with respect to the eliminated variable, each a UniPoly in
    // the surviving one
    std::vector<UniPoly> coeffs_in_var1() const {
        std::vector<std::vector<Integer>> rows(degree1() + 1);
        for (const auto& [k, v] : c_) {
            auto& row = rows[k.first];
            if (static_cast<int>(row.size()) <= k.second) row.resize(k.second + 1);
            row[k.second] = v;
        }
        std::vector<UniPoly> out;
        out.reserve(rows.size());
        for (auto& row : rows) out.emplace_back(std::move(row), v2_);
        return out;
    }
    std::vector<UniPoly> coeffs_in_var2() const {
        std::vector<std::vector<Integer>> rows(degree2() + 1);
        for (const auto& [k, v] : c_) {
            auto& row = rows[k.second];
            if (static_cast<int>(row.size()) <= k.first) row.resize(k.first + 1);
            row[k.first] = v;
        }
        std::vector<UniPoly> out;
        out.reserve(rows.size());
        for (auto& row : rows) out.emplace_back(std::move(row), v1_);
        return out;
    }

    template <typename T>
    T eval(const T& a, const T& b) const {
        // Horner in var1 over precomputed UniPoly slices would need T-powers
        // of b anyway; accumulate powers directly for both scalar kinds.
        const int d1 = degree1(), d2 = degree2();
        if (d1 < 0) return T(0);
        std::vector<T> bp(d2 + 1, T(1));
        for (int i = 1; i <= d2; ++i) bp[i] = bp[i - 1] * b;
        std::vector<T> ap(d1 + 1, T(1));
        for (int i = 1; i <= d1; ++i) ap[i] = ap[i - 1] * a;
        T acc(0);
        for (const auto& [k, v] : c_) acc = acc + T(v) * ap[k.first] * bp[k.second];
        return acc;
    }

    // substitute var1 := value, leaving a univariate polynomial in var2
    UniPoly eval_var1(const Rational& a) const {
        const int d2 = degree2();
        std::vector<Rational> acc(d2 + 1);
        Integer den(1);
        for (const auto& [k, v] : c_) {
            Rational p = pow_rational(a, k.first);
            acc[k.second] += Rational(v) * p;
        }
        for (const auto& x : acc) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<Integer> c(d2 + 1);
        for (int i = 0; i <= d2; ++i) {
            Rational scaled = acc[i] * Rational(den);
            c[i] = scaled.get_num();
        }
        return UniPoly(std::move(c), v2_);
    }

    // "deg1 deg2 coefficient" triples, one per line, ordered by exponent
    void serialize(std::ostream& os) const {
        for (const auto& [k, v] : c_)
            os << k.first << ' ' << k.second << ' ' << v.get_str() << '\n';
    }
    std::string serialize() const {
        std::ostringstream ss;
        serialize(ss);
        return ss.str();
    }
    static BiPoly deserialize(std::istream& is, std::string var1 = "s",
                              std::string var2 = "t") {
        BiPoly p(std::move(var1), std::move(var2));
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            int d1, d2;
            std::string cs;
            if (!(ls >> d1 >> d2 >> cs)) throw Error("bad bpoly line: " + line);
            Integer v;
            if (mpz_set_str(v.get_mpz_t(), cs.c_str(), 10) != 0)
                throw Error("bad bpoly coefficient: " + cs);
            p.set(d1, d2, std::move(v));
        }
        return p;
    }
    static BiPoly deserialize(const std::string& text, std::string var1 = "s",
                              std::string var2 = "t") {
        std::istringstream ss(text);
        return deserialize(ss, std::move(var1), std::move(var2));
    }

   private:
    Map c_;
    std::string v1_ = "s", v2_ = "t";
};

}  // namespace pentacc

#endif
