#ifndef PENTACC_ROOTS_HPP
#define PENTACC_ROOTS_HPP

#include <memory>
#include <utility>
#include <vector>

#include "pentacc/interval.hpp"
#include "pentacc/sturm.hpp"

namespace pentacc {

// One isolated simple real root: the polynomial has exactly one root in the
// closed interval, and changes sign across it.
struct IsolatedRoot {
    std::shared_ptr<const UniPoly> poly;
    Interval interval;
    int index = 0;  // ordinal among the roots returned by one isolation call

    int sign_lo() const { return poly->sign_at(interval.lo); }
    int sign_hi() const { return poly->sign_at(interval.hi); }
};

namespace detail {

inline void isolate_rec(const SturmChain& chain, const Rational& a, const Rational& b,
                        std::vector<Interval>& out) {
    const int n = chain.count(RootRange::open(a, b));
    if (n == 0) return;
    if (n == 1) {
        // shrink endpoints off roots so the closed interval carries a sign change
        Rational lo = a, hi = b;
        const UniPoly& p = chain.squarefree();
        while (p.sign_at(lo) == 0 || p.sign_at(hi) == 0 ||
               p.sign_at(lo) == p.sign_at(hi)) {
            const Rational mid = (lo + hi) / 2;
            if (chain.count(RootRange::open(lo, mid)) == 1)
                hi = mid;
            else if (p.sign_at(mid) == 0) {
                // landed exactly on the root: take a tiny bracket around it
                const Rational step = (hi - lo) / 4;
                lo = mid - step;
                hi = mid + step;
                break;
            } else
                lo = mid;
        }
        out.emplace_back(lo, hi);
        return;
    }
    const Rational mid = (a + b) / 2;
    isolate_rec(chain, a, mid, out);
    if (chain.squarefree().sign_at(mid) == 0) {
        // mid is itself a root; bracket it by a sub-interval free of the others
        Rational lo = mid, hi = mid, step = (b - a) / 4;
        while (chain.count(RootRange::open(mid - step, mid + step)) != 1) step /= 2;
        out.emplace_back(mid - step, mid + step);
    }
    isolate_rec(chain, mid, b, out);
}

}  // namespace detail

// Shrink the isolating interval below `width` by sign bisection.
inline IsolatedRoot refine_root(IsolatedRoot r, const Rational& width) {
    Rational lo = r.interval.lo, hi = r.interval.hi;
    int slo = r.poly->sign_at(lo);
    const int shi = r.poly->sign_at(hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw Error("isolating interval carries no sign change");
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        const int sm = r.poly->sign_at(mid);
        if (sm == 0) {
            // exact rational root: pinch the interval around it
            const Rational q = std::min(Rational(width / 4), Rational((hi - lo) / 8));
            lo = mid - q;
            hi = mid + q;
            break;
        }
        if (sm == slo) {
            lo = mid;
            slo = sm;
        } else {
            hi = mid;
        }
    }
    r.interval = Interval(lo, hi);
    return r;
}

// Disjoint isolating intervals, one per real root of p in (a, b), sorted.
inline std::vector<IsolatedRoot> isolate_roots(const UniPoly& p, const Rational& a,
                                               const Rational& b) {
    SturmChain chain(p);
    if (!chain.input_was_squarefree(p)) throw NotSquarefree();
    std::vector<Interval> ivs;
    detail::isolate_rec(chain, a, b, ivs);
    std::sort(ivs.begin(), ivs.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    auto shared = std::make_shared<const UniPoly>(chain.squarefree());
    std::vector<IsolatedRoot> roots;
    for (size_t i = 0; i < ivs.size(); ++i)
        roots.push_back({shared, ivs[i], static_cast<int>(i)});
    // enforce pairwise disjoint intervals
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        while (intersects(roots[i].interval, roots[i + 1].interval)) {
            roots[i] = refine_root(roots[i], roots[i].interval.width() / 4);
            roots[i + 1] = refine_root(roots[i + 1], roots[i + 1].interval.width() / 4);
        }
    }
    return roots;
}

}  // namespace pentacc

#endif
