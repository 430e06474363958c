// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qdot/dot_array.hpp"
#include "qdot/fock.hpp"

namespace qdot {

/// Dense complex matrix that is unitary within 1e-10 of max-norm deviation.
using Unitary = Eigen::MatrixXcd;

/// One piecewise-constant pulse: a set of active links held for a duration.
struct PulseSegment {
    LinkActivation activation;
    double duration = 0.0;
};

struct PulseSchedule {
    std::vector<PulseSegment> segments;
};

/// U = exp(-i H t) via Hermitian eigendecomposition. Throws
/// NumericalContractError when H deviates from Hermitian by more than 1e-9
/// or the result loses unitarity beyond 1e-10.
Unitary propagator(const OperatorMatrix& h, double duration);

/// Ordered product U = U_n ... U_2 U_1 of per-segment propagators, first
/// listed segment applied first. An empty schedule yields the identity.
Unitary run_schedule(const DotArraySpec& spec, const FockBasis& basis,
                     const PulseSchedule& schedule);

/// Max-norm deviation of U from unitarity, ||U^dag U - I||_max.
double unitarity_defect(const Unitary& u);

} // namespace qdot
