// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdot/fock.hpp"

#include <bit>
#include <string>

#include "qdot/errors.hpp"

namespace qdot {

std::string to_bitstring(FockState s, int n_dots) {
    std::string out(static_cast<std::size_t>(n_dots), '0');
    for (int k = 0; k < n_dots; ++k)
        if (occupied(s, k)) out[static_cast<std::size_t>(k)] = '1';
    return out;
}

FockBasis::FockBasis(int n_dots, int n_electrons)
    : n_dots_(n_dots), n_electrons_(n_electrons) {
    if (n_dots < 1 || n_dots > 16)
        throw ArgumentError("FockBasis: n_dots must be in [1, 16], got " + std::to_string(n_dots));
    if (n_electrons < 0 || n_electrons > n_dots)
        throw ArgumentError("FockBasis: n_electrons must be in [0, n_dots], got " +
                            std::to_string(n_electrons));

    const FockState limit = FockState{1} << n_dots;
    index_of_.assign(limit, -1);
    for (FockState s = 0; s < limit; ++s) {
        if (std::popcount(s) == n_electrons) {
            index_of_[s] = static_cast<std::int32_t>(states_.size());
            states_.push_back(s);
        }
    }
}

FockBasis enumerate_basis(int n_dots, int n_electrons) {
    return FockBasis(n_dots, n_electrons);
}

namespace {

void check_dot_index(const FockBasis& basis, int i, const char* who) {
    if (i < 0 || i >= basis.n_dots())
        throw ArgumentError(std::string(who) + ": dot index " + std::to_string(i) +
                            " out of range for " + std::to_string(basis.n_dots()) + " dots");
}

// (-1)^(occupied dots strictly between i and j in state s)
int transfer_sign(FockState s, int i, int j) {
    const int lo = i < j ? i : j;
    const int hi = i < j ? j : i;
    const FockState below_hi = (FockState{1} << hi) - 1;
    const FockState upto_lo = (FockState{1} << (lo + 1)) - 1;
    const FockState between = below_hi & ~upto_lo;
    return (std::popcount(s & between) & 1) ? -1 : 1;
}

} // namespace

OperatorMatrix hopping_matrix(const FockBasis& basis, int i, int j) {
    check_dot_index(basis, i, "hopping_matrix");
    check_dot_index(basis, j, "hopping_matrix");
    if (i == j)
        throw ArgumentError("hopping_matrix: i == j; use number_matrix for occupation terms");

    OperatorMatrix m = OperatorMatrix::Zero(basis.size(), basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        const FockState s = basis.state(col);
        if (!occupied(s, j) || occupied(s, i)) continue;
        const FockState t = (s & ~(FockState{1} << j)) | (FockState{1} << i);
        const int row = basis.index_of(t);
        m(row, col) = static_cast<double>(transfer_sign(s, i, j));
    }
    return m;
}

OperatorMatrix number_matrix(const FockBasis& basis, int i) {
    check_dot_index(basis, i, "number_matrix");
    OperatorMatrix m = OperatorMatrix::Zero(basis.size(), basis.size());
    for (int col = 0; col < basis.size(); ++col)
        if (occupied(basis.state(col), i)) m(col, col) = 1.0;
    return m;
}

OperatorMatrix total_number_matrix(const FockBasis& basis) {
    OperatorMatrix m = OperatorMatrix::Zero(basis.size(), basis.size());
    for (int col = 0; col < basis.size(); ++col)
        m(col, col) = static_cast<double>(std::popcount(basis.state(col)));
    return m;
}

double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const OperatorMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) < tol;
}

} // namespace qdot
