// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "qdot/constants.hpp"
#include "qdot/gate_analysis.hpp"

namespace qdot {

/// Moving harmonic trap with an optional stationary repelling electron.
/// SI by default; tests may substitute convenience constants.
struct TrapModel {
    double omega = 1.0;                                  // trap angular frequency, rad/s
    double mass = constants::electron_mass;              // kg
    double coulomb_constant = constants::coulomb_e2;     // k_e e^2, N m^2
    std::optional<Eigen::Vector2d> other_electron;       // fixed repeller position, m
    double exclusion_radius = 0.0;                       // trap centers must keep this distance
};

/// Magnetic-field description for Aharonov-Bohm phases: either a uniform
/// out-of-plane field or an ideal solenoid (flux confined to a point).
struct FieldSpec {
    enum class Kind { uniform, solenoid };

    Kind kind = Kind::uniform;
    double b = 0.0;                                  // uniform field strength
    Eigen::Vector2d position = Eigen::Vector2d::Zero();  // solenoid location
    double flux = 0.0;                               // confined flux

    static FieldSpec uniform(double b);
    static FieldSpec solenoid(const Eigen::Vector2d& position, double flux);
};

/// Planar polyline, optionally closed (last point connects back to first).
struct Trajectory {
    std::vector<Eigen::Vector2d> points;
    bool closed = true;
};

enum class Units { natural, si };

/// Phase conventions exposed for SI mode: flux-to-phase prefactor e/hbar
/// (standard Peierls) or e/h.
enum class PhaseConvention { reduced_planck, planck };

/// Regular closed polygon approximation of a circle, counter-clockwise.
Trajectory circle_path(const Eigen::Vector2d& center, double radius, int samples);

/// Equilibrium displacement of a trapped electron repelled by a stationary
/// one at the trap target: minimizer of m w^2 x^2 / 2 + k / x over x > 0,
/// located numerically (bracketed Newton). Closed form (k / (m w^2))^(1/3).
double equilibrium_displacement(double omega, double mass, double coulomb_constant);
double equilibrium_displacement(double omega);  // SI electron constants

/// Quasi-static electron path: for every trap center the electron sits at the
/// local minimum of trap + Coulomb potential, tracked by warm-started damped
/// Newton from the previous point. Without a repeller the output equals the
/// trap path exactly. Throws AdiabaticityError when the tracked minimum jumps
/// by more than 10x the local trap-path step.
Trajectory adiabatic_trajectory(const TrapModel& model, const Trajectory& trap_path);

/// Shoelace signed area; positive for counter-clockwise orientation.
double enclosed_area(const Trajectory& traj);

/// Signed number of turns of a closed trajectory around p. Exact integer.
/// Throws DegenerateGeometryError when p lies within delta_rel of the curve
/// (relative to the bounding-box diagonal).
int winding_number(const Trajectory& traj, const Eigen::Vector2d& p, double delta_rel = 1e-12);

/// Aharonov-Bohm phase of a closed trajectory: uniform field -> prefactor *
/// B * area; solenoid -> winding * prefactor * flux. The prefactor is 1 in
/// natural units (default) and e/hbar (or e/h) in SI.
double ab_phase(const Trajectory& traj, const FieldSpec& field, Units units = Units::natural,
                PhaseConvention convention = PhaseConvention::reduced_planck);

struct GeometricGateResult {
    GateReport report;
    Trajectory free_loop;      // repeller absent
    Trajectory repelled_loop;  // repeller present
    double phi1 = 0.0;         // AB phase of the free loop
    double phi2 = 0.0;         // AB phase of the repelled loop
};

/// Conditional-phase gate from the continuous model: the qubit-1 electron
/// traverses the trap path, picking up phi1 when qubit 2 does not repel it
/// and phi2 when it does. Gate diag(1, 1, e^{i phi2}, e^{i phi1}), so
/// gamma = phi1 - phi2. Requires model.other_electron.
GeometricGateResult geometric_gate_report(const TrapModel& model, const Trajectory& trap_path,
                                          const FieldSpec& field, Units units = Units::natural);

} // namespace qdot
