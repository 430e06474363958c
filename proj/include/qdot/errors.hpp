// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qdot {

/// Invalid arguments to a library operation: bad indices, mismatched sizes,
/// out-of-range parameters.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A numerical contract was violated beyond tolerance (non-Hermitian input
/// to a Hermitian routine, unitarity loss, ...).
class NumericalContractError : public std::runtime_error {
public:
    explicit NumericalContractError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The gate is not phase-like: a diagonal magnitude fell below the phase
/// extraction threshold, so reporting an angle would be meaningless.
class DegenerateGateError : public std::runtime_error {
public:
    explicit DegenerateGateError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ill-posed geometric query (reference point on the curve, open polyline
/// where a closed one is required, ...).
class DegenerateGeometryError : public std::runtime_error {
public:
    explicit DegenerateGeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The tracked potential minimum jumped by more than the allowed step:
/// the trap motion is not adiabatic (bistable landscape).
class AdiabaticityError : public std::runtime_error {
public:
    explicit AdiabaticityError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qdot
