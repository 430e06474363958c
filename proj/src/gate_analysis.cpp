// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdot/gate_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <set>
#include <string>

#include "qdot/angle.hpp"
#include "qdot/errors.hpp"

namespace qdot {

using std::complex;

void QubitEncoding::validate(int n_dots) const {
    std::set<int> dots;
    auto add = [&](int d, const char* name) {
        if (d < 0 || d >= n_dots)
            throw ArgumentError(std::string("QubitEncoding: dot ") + name + " = " +
                                std::to_string(d) + " out of range");
        if (!dots.insert(d).second)
            throw ArgumentError(std::string("QubitEncoding: dot ") + name + " = " +
                                std::to_string(d) + " used twice");
    };
    add(l1, "l1");
    add(r1, "r1");
    add(l2, "l2");
    add(r2, "r2");
    for (int d : ancilla_dots) add(d, "ancilla");
}

FockState QubitEncoding::computational_state(int q1, int q2) const {
    const int dot1 = q1 ? r1 : l1;
    const int dot2 = q2 ? r2 : l2;
    return (FockState{1} << dot1) | (FockState{1} << dot2);
}

TargetGate TargetGate::dynamical(double theta) {
    TargetGate g;
    g.kind = Kind::dynamical;
    g.theta = theta;
    return g;
}

TargetGate TargetGate::geometric(double phi1, double phi2) {
    TargetGate g;
    g.kind = Kind::geometric;
    g.phi1 = phi1;
    g.phi2 = phi2;
    return g;
}

TargetGate TargetGate::topological(double flux) {
    TargetGate g;
    g.kind = Kind::topological;
    g.flux = flux;
    return g;
}

Eigen::Vector4cd TargetGate::diagonal() const {
    auto phase = [](double t) { return std::exp(complex<double>(0.0, t)); };
    switch (kind) {
        case Kind::dynamical:
            return {1.0, phase(theta), 1.0, 1.0};
        case Kind::geometric:
            return {phase(phi1), phase(phi2), 1.0, 1.0};
        case Kind::topological:
            return {1.0, phase(flux), 1.0, 1.0};
    }
    return Eigen::Vector4cd::Ones();
}

double GateReport::max_leakage() const {
    return *std::max_element(leakage.begin(), leakage.end());
}

std::pair<Eigen::Matrix4cd, std::array<double, 4>>
project_computational(const Unitary& u, const FockBasis& basis, const QubitEncoding& enc) {
    enc.validate(basis.n_dots());
    if (u.rows() != basis.size() || u.cols() != basis.size())
        throw ArgumentError("project_computational: operator dimension does not match basis");

    std::array<int, 4> idx{};
    for (int k = 0; k < 4; ++k) {
        const FockState s = enc.computational_state(k >> 1, k & 1);
        idx[static_cast<std::size_t>(k)] = basis.index_of(s);
        if (idx[static_cast<std::size_t>(k)] < 0)
            throw ArgumentError("project_computational: computational state " +
                                to_bitstring(s, basis.n_dots()) + " absent from basis");
    }

    Eigen::Matrix4cd block;
    std::array<double, 4> leakage{};
    for (int col = 0; col < 4; ++col) {
        double captured = 0.0;
        for (int row = 0; row < 4; ++row) {
            const complex<double> amp = u(idx[static_cast<std::size_t>(row)],
                                          idx[static_cast<std::size_t>(col)]);
            block(row, col) = amp;
            captured += std::norm(amp);
        }
        leakage[static_cast<std::size_t>(col)] = std::clamp(1.0 - captured, 0.0, 1.0);
    }
    return {block, leakage};
}

double entangling_phase(const Eigen::Matrix4cd& projected, double min_diag) {
    for (int k = 0; k < 4; ++k)
        if (std::abs(projected(k, k)) <= min_diag)
            throw DegenerateGateError("entangling_phase: diagonal magnitude " +
                                      std::to_string(std::abs(projected(k, k))) +
                                      " at entry " + std::to_string(k) +
                                      " is below threshold " + std::to_string(min_diag));
    const double gamma = std::arg(projected(0, 0)) - std::arg(projected(1, 1)) -
                         std::arg(projected(2, 2)) + std::arg(projected(3, 3));
    return wrap_pi(gamma);
}

namespace {

// For diagonal targets only the diagonal of the projected block enters the
// trace. Maximizing over the qubit-1 phase splits the sum into two branches,
// leaving a 1D maximization over the qubit-2 phase:
//   max_theta |w0 + w1 e^{i theta}| + |w2 + w3 e^{i theta}|,
// with w_k = conj(target_k) * projected_kk.
double local_phase_overlap(const std::array<complex<double>, 4>& w) {
    auto value = [&](double theta) {
        const complex<double> y = std::exp(complex<double>(0.0, theta));
        return std::abs(w[0] + w[1] * y) + std::abs(w[2] + w[3] * y);
    };

    const int coarse = 2048;
    double best_theta = 0.0;
    double best = value(0.0);
    for (int k = 1; k < coarse; ++k) {
        const double theta = 2.0 * constants::pi * k / coarse;
        const double v = value(theta);
        if (v > best) {
            best = v;
            best_theta = theta;
        }
    }

    // Golden-section refinement around the best coarse sample.
    const double golden = 0.5 * (3.0 - std::sqrt(5.0));
    double lo = best_theta - 2.0 * constants::pi / coarse;
    double hi = best_theta + 2.0 * constants::pi / coarse;
    double x1 = lo + golden * (hi - lo);
    double x2 = hi - golden * (hi - lo);
    double f1 = value(x1);
    double f2 = value(x2);
    for (int it = 0; it < 120 && hi - lo > 1e-13; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = hi - golden * (hi - lo);
            f2 = value(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = lo + golden * (hi - lo);
            f1 = value(x1);
        }
    }
    return std::max({best, f1, f2});
}

} // namespace

double phase_gate_fidelity(const Eigen::Matrix4cd& projected, const Eigen::Vector4cd& target_diag) {
    std::array<complex<double>, 4> w{};
    for (int k = 0; k < 4; ++k)
        w[static_cast<std::size_t>(k)] = std::conj(target_diag(k)) * projected(k, k);
    return std::clamp(local_phase_overlap(w) / 4.0, 0.0, 1.0);
}

double compare_to_target(const Eigen::Matrix4cd& projected, const TargetGate& target) {
    return phase_gate_fidelity(projected, target.diagonal());
}

GateReport make_gate_report(const Unitary& u, const FockBasis& basis, const QubitEncoding& enc,
                            const Eigen::Vector4cd& target_diag) {
    GateReport report;
    auto [block, leakage] = project_computational(u, basis, enc);
    report.projected = block;
    report.leakage = leakage;

    double offdiag = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            if (r == c)
                report.diagonal_phases[static_cast<std::size_t>(r)] = std::arg(block(r, r));
            else
                offdiag = std::max(offdiag, std::abs(block(r, c)));
        }
    report.offdiag_residual = offdiag;

    try {
        report.entangling_phase = entangling_phase(block);
    } catch (const DegenerateGateError&) {
        report.degenerate = true;
        report.entangling_phase = std::numeric_limits<double>::quiet_NaN();
    }
    report.fidelity_vs_target = phase_gate_fidelity(block, target_diag);
    return report;
}

} // namespace qdot
