// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdot/scalar_min.hpp"

#include <cmath>

#include "qdot/errors.hpp"

namespace qdot {

ScalarMinResult minimize_golden(const std::function<double(double)>& f, double lo, double hi,
                                double rel_tol, int max_iter) {
    if (!(lo < hi))
        throw ArgumentError("minimize_golden: need lo < hi");

    const double golden = 0.5 * (3.0 - std::sqrt(5.0));
    double x1 = lo + golden * (hi - lo);
    double x2 = hi - golden * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    int it = 0;
    while (it < max_iter && (hi - lo) > rel_tol * (std::abs(lo) + std::abs(hi) + 1e-300)) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = lo + golden * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = hi - golden * (hi - lo);
            f2 = f(x2);
        }
        ++it;
    }
    const double x = 0.5 * (lo + hi);
    return {x, f(x), it};
}

double minimize_newton_bracketed(const std::function<double(double)>& df,
                                 const std::function<double(double)>& d2f, double lo, double hi,
                                 int max_iter) {
    if (!(lo < hi))
        throw ArgumentError("minimize_newton_bracketed: need lo < hi");
    double glo = df(lo);
    double ghi = df(hi);
    if (glo > 0.0 || ghi < 0.0)
        throw ArgumentError("minimize_newton_bracketed: bracket does not straddle a minimum");
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        const double g = df(x);
        if (g == 0.0) return x;
        if (g < 0.0) lo = x; else hi = x;

        const double curv = d2f(x);
        double next = (curv > 0.0) ? x - g / curv : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x || hi - lo <= 2.0 * std::abs(x) * 1e-17) return x;
        x = next;
    }
    return x;
}

} // namespace qdot
