#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "qhd/errors.hpp"

namespace qhd::roots {

/// Safeguarded Newton iteration on a sign-changing bracket [lo, hi].
///
/// A Newton step is taken only when it lands strictly inside the current
/// bracket and halves the previous step; otherwise the midpoint is used.
/// Stops once the bracket or the last step is below `xtol`.
template <class Fn, class Dfn>
double newton_bisect(Fn&& fn, Dfn&& dfn, double lo, double hi, double xtol = 1e-12,
                     int max_iter = 200) {
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "root not bracketed on [%.17g, %.17g]", lo, hi);
        throw BracketError(buf);
    }
    // orient so that fn(neg) < 0 < fn(pos)
    double neg = flo < 0.0 ? lo : hi;
    double pos = flo < 0.0 ? hi : lo;

    double x = 0.5 * (lo + hi);
    double dx_old = std::abs(hi - lo);
    double dx = dx_old;
    double fx = fn(x);
    double dfx = dfn(x);

    for (int it = 0; it < max_iter; ++it) {
        const double a = std::min(neg, pos);
        const double b = std::max(neg, pos);
        const double newton = dfx != 0.0 ? x - fx / dfx : a - 1.0;
        if (!(newton > a && newton < b) || std::abs(2.0 * fx) > std::abs(dx_old * dfx)) {
            dx_old = dx;
            dx = 0.5 * (pos - neg);
            x = neg + dx;
        } else {
            dx_old = dx;
            dx = fx / dfx;
            x = newton;
        }
        if (std::abs(dx) < xtol || b - a < xtol) {
            return x;
        }
        fx = fn(x);
        if (fx == 0.0) {
            return x;
        }
        dfx = dfn(x);
        if (fx < 0.0) {
            neg = x;
        } else {
            pos = x;
        }
    }
    return x;
}

}  // namespace qhd::roots
