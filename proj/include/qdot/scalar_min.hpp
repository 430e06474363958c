// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace qdot {

struct ScalarMinResult {
    double x = 0.0;
    double value = 0.0;
    int iterations = 0;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
/// Converges to roughly sqrt(machine-eps) relative accuracy in x.
ScalarMinResult minimize_golden(const std::function<double(double)>& f, double lo, double hi,
                                double rel_tol = 1e-10, int max_iter = 200);

/// Bracketed damped Newton on the derivative: locates the root of df in
/// [lo, hi] (df(lo) < 0 < df(hi)) to full floating-point accuracy, falling
/// back to bisection whenever a Newton step leaves the bracket. Use for
/// minimizers that must be sharper than golden-section can localize.
double minimize_newton_bracketed(const std::function<double(double)>& df,
                                 const std::function<double(double)>& d2f, double lo, double hi,
                                 int max_iter = 200);

} // namespace qdot
