// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qdot/evolution.hpp"
#include "qdot/fock.hpp"

namespace qdot {

/// Charge-qubit encoding: each qubit is one electron shared between a left
/// and a right dot, |0> = left, |1> = right. Computational Fock states hold
/// exactly one electron per qubit pair with all other dots empty.
struct QubitEncoding {
    int l1 = 0;
    int r1 = 0;
    int l2 = 0;
    int r2 = 0;
    std::vector<int> ancilla_dots;

    void validate(int n_dots) const;

    /// Occupation word of |q1 q2>, q1/q2 in {0, 1}.
    FockState computational_state(int q1, int q2) const;
};

/// The three diagonal two-qubit target gates, in basis |00>,|01>,|10>,|11>.
struct TargetGate {
    enum class Kind { dynamical, geometric, topological };

    Kind kind = Kind::dynamical;
    double theta = 0.0;  // dynamical: accumulated Coulomb phase
    double phi1 = 0.0;   // geometric: free-loop phase
    double phi2 = 0.0;   // geometric: repelled-loop phase
    double flux = 0.0;   // topological: confined flux

    static TargetGate dynamical(double theta);
    static TargetGate geometric(double phi1, double phi2);
    static TargetGate topological(double flux);

    Eigen::Vector4cd diagonal() const;
};

struct GateReport {
    Eigen::Matrix4cd projected = Eigen::Matrix4cd::Identity();
    std::array<double, 4> leakage{};          // per computational column
    std::array<double, 4> diagonal_phases{};  // arg of the diagonal entries
    double entangling_phase = 0.0;            // gamma, in (-pi, pi]
    double offdiag_residual = 0.0;            // max |off-diagonal| of projected
    double fidelity_vs_target = 0.0;
    bool degenerate = false;                  // gamma/fidelity meaningless when set
    std::vector<std::string> warnings;

    double max_leakage() const;
};

/// 4x4 block of U over the computational states (columns ordered
/// |00>,|01>,|10>,|11>) and per-column leakage 1 - sum of |amplitude|^2
/// over computational rows.
std::pair<Eigen::Matrix4cd, std::array<double, 4>>
project_computational(const Unitary& u, const FockBasis& basis, const QubitEncoding& enc);

/// Entangling phase gamma = arg u00 - arg u01 - arg u10 + arg u11, reduced to
/// (-pi, pi]. The unique diagonal-gate invariant under single-qubit phase
/// rotations and global phase. Throws DegenerateGateError when any diagonal
/// magnitude is at or below min_diag.
double entangling_phase(const Eigen::Matrix4cd& projected, double min_diag = 0.5);

/// max over single-qubit Z rotations and global phase of
/// |tr((L1 (x) L2 * diag(target))^dag * projected)| / 4.
double phase_gate_fidelity(const Eigen::Matrix4cd& projected, const Eigen::Vector4cd& target_diag);

double compare_to_target(const Eigen::Matrix4cd& projected, const TargetGate& target);

/// Full report for an evolution against a diagonal target gate. Degenerate
/// (non-phase-like) projections are flagged rather than thrown.
GateReport make_gate_report(const Unitary& u, const FockBasis& basis, const QubitEncoding& enc,
                            const Eigen::Vector4cd& target_diag);

} // namespace qdot
