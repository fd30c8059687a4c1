#ifndef PENTACC_STURM_HPP
#define PENTACC_STURM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pentacc/upoly.hpp"

namespace pentacc {

// Open interval with optionally infinite endpoints, for root counting.
struct RootRange {
    std::optional<Rational> lo;  // nullopt = -infinity
    std::optional<Rational> hi;  // nullopt = +infinity

    static RootRange whole() { return {std::nullopt, std::nullopt}; }
    static RootRange open(Rational a, Rational b) { return {std::move(a), std::move(b)}; }
};

// Sturm chain of the squarefree part, built once and reused for counting.
// Remainders are fraction-free (positive pseudo-remainders) with
// sign-preserving primitive normalization at every step, so each element is
// a positive constant multiple of the classical Sturm polynomial.
class SturmChain {
   public:
    explicit SturmChain(const UniPoly& p) {
        if (p.is_zero()) throw ZeroPolynomial();
        chain_ = build(pp_keep_sign(p));
        if (chain_.back().degree() > 0) {
            // gcd(p, p') is nonconstant: restart from the squarefree part
            UniPoly sf = exact_divide(chain_.front(), pp_keep_sign(chain_.back()));
            chain_ = build(pp_keep_sign(sf));
        }
    }

    const UniPoly& squarefree() const { return chain_.front(); }
    const std::vector<UniPoly>& polys() const { return chain_; }
    bool input_was_squarefree(const UniPoly& p) const {
        return chain_.front().degree() == p.degree();
    }

    int variations_at(const Rational& x) const {
        int v = 0, prev = 0;
        for (const auto& p : chain_) {
            const int s = p.sign_at(x);
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    }

    int variations_at_pos_inf() const {
        int v = 0, prev = 0;
        for (const auto& p : chain_) {
            const int s = sign(p.leading());
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    int variations_at_neg_inf() const {
        int v = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = sign(p.leading());
            if (p.degree() % 2 == 1) s = -s;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    // Number of distinct real roots in the open range. A rational endpoint
    // that happens to be a root is deflated out, which keeps the count exact.
    int count(const RootRange& range) const {
        UniPoly head = chain_.front();
        bool deflated = false;
        for (const auto* ep : {&range.lo, &range.hi}) {
            if (ep->has_value() && head.sign_at(**ep) == 0) {
                head = deflate(head, **ep);
                deflated = true;
            }
        }
        if (deflated) return SturmChain(head).count(range);
        const int va = range.lo ? variations_at(*range.lo) : variations_at_neg_inf();
        const int vb = range.hi ? variations_at(*range.hi) : variations_at_pos_inf();
        return va - vb;
    }

   private:
    static UniPoly pp_keep_sign(const UniPoly& p) {
        return p.divide_content(abs(p.content()));
    }

    static std::vector<UniPoly> build(UniPoly head) {
        std::vector<UniPoly> chain;
        chain.push_back(std::move(head));
        if (chain.front().degree() > 0)
            chain.push_back(pp_keep_sign(chain.front().derivative()));
        while (chain.size() >= 2 && chain.back().degree() > 0) {
            UniPoly r = pseudo_rem_abs(chain[chain.size() - 2], chain.back());
            if (r.is_zero()) break;
            chain.push_back(pp_keep_sign(-r));
        }
        return chain;
    }

    // Remove the rational root a/b: divide by (b x - a).
    static UniPoly deflate(const UniPoly& p, const Rational& root) {
        std::vector<Integer> lin{-root.get_num(), root.get_den()};
        return exact_divide(p, UniPoly(std::move(lin), p.var()));
    }

    std::vector<UniPoly> chain_;
};

inline int sturm_count(const UniPoly& p, const RootRange& range) {
    return SturmChain(p).count(range);
}

}  // namespace pentacc

#endif
