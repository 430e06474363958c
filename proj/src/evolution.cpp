// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdot/evolution.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <string>

#include "qdot/errors.hpp"

namespace qdot {

double unitarity_defect(const Unitary& u) {
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    return max_abs(gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols()));
}

Unitary propagator(const OperatorMatrix& h, double duration) {
    if (h.rows() != h.cols())
        throw ArgumentError("propagator: matrix must be square");
    if (!std::isfinite(duration) || duration < 0.0)
        throw ArgumentError("propagator: duration must be finite and non-negative");

    const double herm_defect = max_abs(h - h.adjoint());
    if (herm_defect > 1e-9)
        throw NumericalContractError("propagator: input deviates from Hermitian by " +
                                     std::to_string(herm_defect));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalContractError("propagator: eigendecomposition failed");

    const auto& evals = solver.eigenvalues();
    const auto& evecs = solver.eigenvectors();
    Eigen::VectorXcd phases(evals.size());
    for (Eigen::Index k = 0; k < evals.size(); ++k)
        phases(k) = std::exp(std::complex<double>(0.0, -evals(k) * duration));

    Unitary u = evecs * phases.asDiagonal() * evecs.adjoint();
    const double defect = unitarity_defect(u);
    if (defect > 1e-10)
        throw NumericalContractError("propagator: unitarity defect " + std::to_string(defect));
    return u;
}

Unitary run_schedule(const DotArraySpec& spec, const FockBasis& basis,
                     const PulseSchedule& schedule) {
    Unitary u = Unitary::Identity(basis.size(), basis.size());
    for (const auto& segment : schedule.segments) {
        if (!std::isfinite(segment.duration) || segment.duration < 0.0)
            throw ArgumentError("run_schedule: segment duration must be finite and non-negative");
        const OperatorMatrix h = build_hamiltonian(spec, basis, segment.activation);
        u = propagator(h, segment.duration) * u;
    }
    return u;
}

} // namespace qdot
