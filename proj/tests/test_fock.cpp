// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "qdot/errors.hpp"
#include "qdot/fock.hpp"

using namespace qdot;

namespace {

// Independent sign oracle: kets as ordered creation strings. Applying an
// operator counts explicit anticommutation swaps instead of using bit masks.
struct Ket {
    int sign = 1;                // 0 = annihilated
    std::vector<int> occupied;   // ascending creation order
};

Ket apply_create(Ket k, int dot) {
    if (k.sign == 0) return k;
    if (std::find(k.occupied.begin(), k.occupied.end(), dot) != k.occupied.end())
        return {0, {}};
    const auto pos = std::lower_bound(k.occupied.begin(), k.occupied.end(), dot);
    const auto swaps = std::distance(k.occupied.begin(), pos);
    if (swaps % 2 != 0) k.sign = -k.sign;
    k.occupied.insert(pos, dot);
    return k;
}

Ket apply_annihilate(Ket k, int dot) {
    if (k.sign == 0) return k;
    const auto pos = std::find(k.occupied.begin(), k.occupied.end(), dot);
    if (pos == k.occupied.end()) return {0, {}};
    const auto swaps = std::distance(k.occupied.begin(), pos);
    if (swaps % 2 != 0) k.sign = -k.sign;
    k.occupied.erase(pos);
    return k;
}

Ket ket_of(FockState s, int n_dots) {
    Ket k;
    for (int d = 0; d < n_dots; ++d)
        if (occupied(s, d)) k.occupied.push_back(d);
    return k;
}

FockState word_of(const Ket& k) {
    FockState s = 0;
    for (int d : k.occupied) s |= FockState{1} << d;
    return s;
}

OperatorMatrix oracle_hopping(const FockBasis& basis, int i, int j) {
    OperatorMatrix m = OperatorMatrix::Zero(basis.size(), basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        Ket k = ket_of(basis.state(col), basis.n_dots());
        k = apply_annihilate(k, j);
        k = apply_create(k, i);
        if (k.sign == 0) continue;
        m(basis.index_of(word_of(k)), col) = k.sign;
    }
    return m;
}

} // namespace

TEST_CASE("basis enumeration sizes and order") {
    const FockBasis b21 = enumerate_basis(2, 1);
    REQUIRE(b21.size() == 2);
    CHECK(to_bitstring(b21.state(0), 2) == "10");
    CHECK(to_bitstring(b21.state(1), 2) == "01");

    CHECK(enumerate_basis(4, 2).size() == 6);
    CHECK(enumerate_basis(6, 2).size() == 15);
    CHECK(enumerate_basis(3, 0).size() == 1);
    CHECK(enumerate_basis(3, 3).size() == 1);
}

TEST_CASE("basis enumeration is deterministic") {
    const FockBasis a = enumerate_basis(5, 2);
    const FockBasis b = enumerate_basis(5, 2);
    REQUIRE(a.size() == b.size());
    for (int k = 0; k < a.size(); ++k) CHECK(a.state(k) == b.state(k));
}

TEST_CASE("basis argument errors") {
    CHECK_THROWS_AS(enumerate_basis(0, 0), ArgumentError);
    CHECK_THROWS_AS(enumerate_basis(17, 2), ArgumentError);
    CHECK_THROWS_AS(enumerate_basis(4, 5), ArgumentError);
    CHECK_THROWS_AS(enumerate_basis(4, -1), ArgumentError);
}

TEST_CASE("single-electron hop carries no string sign") {
    const FockBasis basis = enumerate_basis(2, 1);
    const OperatorMatrix m = hopping_matrix(basis, 0, 1);  // d_0^dag d_1
    // |01> (index 1) -> +|10> (index 0)
    CHECK(m(0, 1) == std::complex<double>(1.0, 0.0));
    CHECK(m(1, 0) == std::complex<double>(0.0, 0.0));
    CHECK(m(0, 0) == std::complex<double>(0.0, 0.0));
    CHECK(m(1, 1) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("hop across an occupied dot flips sign") {
    // d_0^dag d_2 on |011> crosses the occupied dot 1: -|110>.
    const FockBasis basis = enumerate_basis(3, 2);
    const int from = basis.index_of(0b110);  // dots 1, 2 occupied -> "011"
    const int to = basis.index_of(0b011);    // dots 0, 1 occupied -> "110"
    REQUIRE(to_bitstring(basis.state(from), 3) == "011");
    REQUIRE(to_bitstring(basis.state(to), 3) == "110");
    const OperatorMatrix m = hopping_matrix(basis, 0, 2);
    CHECK(m(to, from).real() == doctest::Approx(-1.0));
}

TEST_CASE("double application is Pauli-blocked") {
    const FockBasis basis = enumerate_basis(2, 1);
    const OperatorMatrix m = hopping_matrix(basis, 0, 1);
    CHECK(max_abs(m * m) == 0.0);
}

TEST_CASE("number operator diagonals") {
    const FockBasis b21 = enumerate_basis(2, 1);
    const OperatorMatrix n0 = number_matrix(b21, 0);
    CHECK(n0(0, 0).real() == doctest::Approx(1.0));
    CHECK(n0(1, 1).real() == doctest::Approx(0.0));

    const FockBasis b42 = enumerate_basis(4, 2);
    OperatorMatrix total = OperatorMatrix::Zero(b42.size(), b42.size());
    for (int d = 0; d < 4; ++d) total += number_matrix(b42, d);
    CHECK(max_abs(total - 2.0 * OperatorMatrix::Identity(b42.size(), b42.size())) < 1e-15);
    CHECK(max_abs(total - total_number_matrix(b42)) < 1e-15);

    // n_2 n_3 marks exactly the states occupying both dots.
    const OperatorMatrix pair = number_matrix(b42, 2) * number_matrix(b42, 3);
    for (int k = 0; k < b42.size(); ++k) {
        const bool both = occupied(b42.state(k), 2) && occupied(b42.state(k), 3);
        CHECK(pair(k, k).real() == doctest::Approx(both ? 1.0 : 0.0));
    }
}

TEST_CASE("n_i is idempotent") {
    const FockBasis basis = enumerate_basis(4, 2);
    for (int d = 0; d < 4; ++d) {
        const OperatorMatrix n = number_matrix(basis, d);
        CHECK(max_abs(n * n - n) < 1e-15);
    }
}

TEST_CASE("hopping adjointness") {
    const FockBasis basis = enumerate_basis(4, 2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            const OperatorMatrix fwd = hopping_matrix(basis, i, j);
            const OperatorMatrix bwd = hopping_matrix(basis, j, i);
            CHECK(max_abs(fwd.adjoint() - bwd) < 1e-14);
        }
}

TEST_CASE("hopping matches the anticommutation oracle") {
    for (int n_dots = 2; n_dots <= 4; ++n_dots)
        for (int n_el = 0; n_el <= n_dots; ++n_el) {
            const FockBasis basis = enumerate_basis(n_dots, n_el);
            for (int i = 0; i < n_dots; ++i)
                for (int j = 0; j < n_dots; ++j) {
                    if (i == j) continue;
                    CHECK(max_abs(hopping_matrix(basis, i, j) - oracle_hopping(basis, i, j)) ==
                          0.0);
                }
        }
}

TEST_CASE("operator argument errors") {
    const FockBasis basis = enumerate_basis(3, 1);
    CHECK_THROWS_AS(hopping_matrix(basis, 0, 0), ArgumentError);
    CHECK_THROWS_AS(hopping_matrix(basis, 0, 3), ArgumentError);
    CHECK_THROWS_AS(hopping_matrix(basis, -1, 1), ArgumentError);
    CHECK_THROWS_AS(number_matrix(basis, 3), ArgumentError);
}
