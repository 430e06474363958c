// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace qdot::constants {

inline constexpr double pi = 3.14159265358979323846;

// SI values used by the continuous-trap model.
inline constexpr double electron_mass = 9.109e-31;       // kg
inline constexpr double coulomb_e2 = 2.307e-28;          // k_e * e^2, N m^2
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double planck_h = 6.62607015e-34;       // J s

} // namespace qdot::constants
