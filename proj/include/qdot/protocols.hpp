// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qdot/dot_array.hpp"
#include "qdot/evolution.hpp"
#include "qdot/gate_analysis.hpp"

namespace qdot {

/// Paired back-and-forth pulse insertion on one triangle link, placed after
/// the given segment of the base schedule (0 = before the first segment).
struct Deformation {
    int after_segment = 0;
    int a = 0;
    int b = 0;
};

/// Discrete Aharonov-Bohm loop protocol on the canonical six-dot array:
/// qubit 1 = dots (0, 1), loop = dots (1, 2, 3), qubit 2 = dots (4, 5),
/// Coulomb blockade pair (3, 4). Flux threads the triangle via the phase of
/// link (3, 1).
struct TriangleScenario {
    double tunneling = 1.0;   // J, common link magnitude
    double coulomb = 1.0;     // U, blockade strength
    double flux = 0.0;        // loop flux, radians
    int windings = 1;
    std::vector<Deformation> deformations;
    double timing_error = 0.0;  // epsilon: pulses last pi/(2J) * (1 + epsilon)
};

QubitEncoding triangle_encoding();
QubitEncoding dynamical_encoding();

/// Six-dot array for the triangle protocol with the given loop flux.
/// Emits a "blockade regime" warning string into *warning when U/J < 10.
DotArraySpec make_triangle_spec(const TriangleScenario& s, double flux);

/// Per winding: [(1-2, T), (2-3, T), (1-2, T), (3-1, T)] with
/// T = pi/(2J) * (1 + timing_error), plus any deformation insertions.
PulseSchedule build_triangle_schedule(const TriangleScenario& s);

/// Ideal-blockade branch amplitudes (U -> infinity, exact transfers): each
/// pulse either fully transfers the loop electron with amplitude
/// -i e^{i theta}, is Coulomb-blocked (identity), or does not touch it.
/// Composed directly from 2-level transfer factors, independent of the
/// Fock-space evolution.
Eigen::Vector4cd ideal_triangle_amplitudes(const TriangleScenario& s, double flux);

/// Simulate the triangle schedule on an explicit spec (possibly
/// gauge-transformed) and report against the ideal-blockade gate.
GateReport run_triangle_gate(const DotArraySpec& spec, const TriangleScenario& s, double flux);

/// Gate reports at the scenario flux and at flux zero.
std::pair<GateReport, GateReport> triangle_ab_scenario(const TriangleScenario& s);

/// Purely dynamical conditional phase: two double-dot qubits, Coulomb
/// delta_e between the adjacent inner dots (r1, l2), no tunneling, free
/// evolution for time t.
GateReport dynamical_gate_scenario(double delta_e, double t);

struct BlockadeResult {
    double leakage = 0.0;             // peak blocked-transfer probability during the pulse
    double effective_tunneling = 0.0; // I = 2 J^2 / U
};

/// Single blocked pulse: loop electron in dot 2, blocker in dot 4, link 2-3
/// held for T = pi/(2J). Leakage is the peak probability of the electron
/// appearing in dot 3 (the Coulomb-adjacent configuration) over the pulse.
BlockadeResult blockade_leakage(double tunneling, double coulomb);

struct TimingSweepRow {
    double epsilon = 0.0;
    double leakage_max = 0.0;
    double gamma_dev = 0.0;  // wrap(gamma(flux) - gamma(0) - windings * flux)
    double fidelity = 0.0;
    bool degenerate = false;
};

/// One row per epsilon; gamma_dev and fidelity are NaN on degenerate rows.
std::vector<TimingSweepRow> timing_robustness_sweep(const TriangleScenario& s,
                                                    std::span<const double> eps_grid);

} // namespace qdot
