#pragma once

#include <algorithm>
#include <cmath>

#include "patmat/errors.hpp"

namespace patmat {

namespace detail {

template <typename F>
double adapt_step(const F& f, double a, double m, double b, double fa, double fm,
                  double fb, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adapt_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// adaptive Simpson on [a, b] with error target tol
template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
    if (!(b > a)) {
        return 0.0;
    }
    double m = 0.5 * (a + b);
    double fa = f(a);
    double fm = f(m);
    double fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adapt_step(f, a, m, b, fa, fm, fb, whole, tol, 48);
}

// integrate f over [a, b] (a > 0) by doubling segments, so wide or unbounded
// ranges stay cheap; tail_bound(t) must dominate the remaining mass past t
// when b is infinite
template <typename F, typename Tail>
double integrate_geometric(const F& f, double a, double b, const Tail& tail_bound) {
    double total = 0.0;
    double lo = a;
    while (true) {
        double hi = std::min(b, lo * 2.0);
        total += adaptive_simpson(f, lo, hi, 1e-15 * std::max(1.0, std::fabs(total)));
        lo = hi;
        if (lo >= b) {
            return total;
        }
        if (std::isinf(b) && tail_bound(lo) < 1e-15 * std::max(total, 1e-30)) {
            return total;
        }
        if (lo > 1e18) {
            throw numeric_error("geometric integration failed to converge");
        }
    }
}

}  // namespace patmat
