// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace qdot {

/// Occupation pattern of a dot array: bit k set = dot k occupied.
using FockState = std::uint32_t;

/// Dense complex operator on a FockBasis.
using OperatorMatrix = Eigen::MatrixXcd;

inline bool occupied(FockState s, int dot) { return (s >> dot) & 1u; }

/// Render as a bitstring with dot 0 leftmost, e.g. "10" = dot 0 occupied.
std::string to_bitstring(FockState s, int n_dots);

/// Occupation-number basis for a fixed number of spinless fermions on
/// n_dots sites.
///
/// States are ordered by ascending occupation word (bit k = dot k), which
/// for fixed particle number is the lexicographic order of the occupied
/// index tuples: for (2 dots, 1 electron) the order is [10, 01].
///
/// Kets are defined with creation operators applied in ascending dot order,
/// |{i < j < ...}> = d_i^dag d_j^dag ... |vac>; every operator sign below
/// follows from that convention.
class FockBasis {
public:
    FockBasis(int n_dots, int n_electrons);

    int n_dots() const { return n_dots_; }
    int n_electrons() const { return n_electrons_; }
    int size() const { return static_cast<int>(states_.size()); }
    FockState state(int index) const { return states_[static_cast<std::size_t>(index)]; }
    const std::vector<FockState>& states() const { return states_; }

    /// Index of a state word in the basis, -1 if absent.
    int index_of(FockState s) const {
        return s < index_of_.size() ? index_of_[s] : -1;
    }

private:
    int n_dots_;
    int n_electrons_;
    std::vector<FockState> states_;
    std::vector<std::int32_t> index_of_;
};

/// All C(n_dots, n_electrons) states in the deterministic basis order.
/// Requires 1 <= n_dots <= 16 and 0 <= n_electrons <= n_dots.
FockBasis enumerate_basis(int n_dots, int n_electrons);

/// Matrix of d_i^dag d_j (i != j): moves one electron j -> i with sign
/// (-1)^(number of occupied dots strictly between i and j).
OperatorMatrix hopping_matrix(const FockBasis& basis, int i, int j);

/// Diagonal occupation operator n_i = d_i^dag d_i.
OperatorMatrix number_matrix(const FockBasis& basis, int i);

/// Total electron number operator (n_electrons * identity on a fixed-number basis).
OperatorMatrix total_number_matrix(const FockBasis& basis);

/// Largest entrywise absolute value.
double max_abs(const Eigen::MatrixXcd& m);

bool is_hermitian(const OperatorMatrix& m, double tol = 1e-12);

} // namespace qdot
