// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "qdot/constants.hpp"

namespace qdot {

/// Reduce an angle to the half-open interval (-pi, pi].
inline double wrap_pi(double angle) {
    double w = std::fmod(angle, 2.0 * constants::pi);
    if (w <= -constants::pi) w += 2.0 * constants::pi;
    else if (w > constants::pi) w -= 2.0 * constants::pi;
    return w;
}

} // namespace qdot
