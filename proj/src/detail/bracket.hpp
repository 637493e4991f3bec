#pragma once

#include <cmath>
#include <utility>

#include "delaystab/errors.hpp"

namespace dstab::detail {

/// Root of f on [lo, hi] where f(lo) and f(hi) differ in sign.
/// Bisection until the bracket is small, then Illinois-safeguarded secant
/// steps; a bisection step is forced whenever the bracket fails to halve.
template <class F>
double solve_bracketed(F&& f, double lo, double hi, double tol = 1e-13) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) throw NumericalError("solve_bracketed: no sign change");

    const double coarse = 1e-3 * (hi - lo);
    int iter = 0;
    while (hi - lo > coarse && hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) { lo = mid; flo = fm; } else { hi = mid; fhi = fm; }
        if (++iter > 200) throw NumericalError("solve_bracketed: bisection stalled");
    }

    int side = 0;  // which endpoint was retained last (-1 lo, +1 hi)
    while (hi - lo > tol) {
        const double width = hi - lo;
        double x = (lo * fhi - hi * flo) / (fhi - flo);
        if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
        double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x; flo = fx;
            if (side == 1) fhi *= 0.5;
            side = 1;
        } else {
            hi = x; fhi = fx;
            if (side == -1) flo *= 0.5;
            side = -1;
        }
        if (hi - lo > 0.5 * width && hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (fm == 0.0) return mid;
            if ((fm > 0.0) == (flo > 0.0)) { lo = mid; flo = fm; } else { hi = mid; fhi = fm; }
            side = 0;
        }
        if (++iter > 600) throw NumericalError("solve_bracketed: no convergence");
    }
    return std::abs(flo) < std::abs(fhi) ? lo : hi;
}

}  // namespace dstab::detail
