// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdot/protocols.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "qdot/angle.hpp"
#include "qdot/errors.hpp"

namespace qdot {

using std::complex;

namespace {

constexpr int kLoopDots[3] = {1, 2, 3};

bool is_triangle_link(int a, int b) {
    auto matches = [&](int x, int y) {
        return (a == x && b == y) || (a == y && b == x);
    };
    return matches(1, 2) || matches(2, 3) || matches(3, 1);
}

} // namespace

QubitEncoding triangle_encoding() {
    QubitEncoding enc;
    enc.l1 = 0;
    enc.r1 = 1;
    enc.l2 = 4;
    enc.r2 = 5;
    enc.ancilla_dots = {2, 3};
    return enc;
}

QubitEncoding dynamical_encoding() {
    QubitEncoding enc;
    enc.l1 = 0;
    enc.r1 = 1;
    enc.l2 = 2;
    enc.r2 = 3;
    return enc;
}

DotArraySpec make_triangle_spec(const TriangleScenario& s, double flux) {
    if (s.tunneling <= 0.0)
        throw ArgumentError("make_triangle_spec: tunneling must be positive");
    if (s.coulomb <= 0.0)
        throw ArgumentError("make_triangle_spec: Coulomb strength must be positive");

    DotArraySpec spec;
    spec.n_dots = 6;
    spec.dot_energies.assign(6, 0.0);
    spec.links = {
        TunnelLink{1, 2, s.tunneling, 0.0},
        TunnelLink{2, 3, s.tunneling, 0.0},
        TunnelLink{3, 1, s.tunneling, flux},  // single-link flux gauge
    };
    spec.coulomb_pairs = {CoulombPair{3, 4, s.coulomb}};
    spec.validate();
    return spec;
}

PulseSchedule build_triangle_schedule(const TriangleScenario& s) {
    if (s.windings < 1)
        throw ArgumentError("build_triangle_schedule: windings must be >= 1");
    if (!(s.timing_error > -1.0))
        throw ArgumentError("build_triangle_schedule: timing error must exceed -1");

    const double base = constants::pi / (2.0 * s.tunneling);
    const double duration = base * (1.0 + s.timing_error);

    std::vector<std::pair<int, int>> pulses;
    for (int w = 0; w < s.windings; ++w) {
        pulses.emplace_back(1, 2);
        pulses.emplace_back(2, 3);
        pulses.emplace_back(1, 2);
        pulses.emplace_back(3, 1);
    }

    // Deformations insert a back-and-forth pair after a base-sequence position.
    // Apply in descending position so earlier insertions do not shift later ones.
    std::vector<Deformation> defs = s.deformations;
    std::stable_sort(defs.begin(), defs.end(),
                     [](const Deformation& x, const Deformation& y) {
                         return x.after_segment > y.after_segment;
                     });
    const int base_len = static_cast<int>(pulses.size());
    for (const auto& d : defs) {
        if (!is_triangle_link(d.a, d.b))
            throw ArgumentError("build_triangle_schedule: deformation link (" +
                                std::to_string(d.a) + "," + std::to_string(d.b) +
                                ") is not a triangle link");
        if (d.after_segment < 0 || d.after_segment > base_len)
            throw ArgumentError("build_triangle_schedule: deformation position " +
                                std::to_string(d.after_segment) + " out of range");
        pulses.insert(pulses.begin() + d.after_segment, 2, std::pair<int, int>{d.a, d.b});
    }

    PulseSchedule schedule;
    schedule.segments.reserve(pulses.size());
    for (const auto& [a, b] : pulses)
        schedule.segments.push_back(PulseSegment{LinkActivation::single(a, b), duration});
    return schedule;
}

Eigen::Vector4cd ideal_triangle_amplitudes(const TriangleScenario& s, double flux) {
    const DotArraySpec spec = make_triangle_spec(s, flux);
    const PulseSchedule schedule = build_triangle_schedule(s);
    const complex<double> transfer(0.0, -1.0);

    Eigen::Vector4cd amps = Eigen::Vector4cd::Ones();
    for (int q1 = 0; q1 <= 1; ++q1) {
        for (int q2 = 0; q2 <= 1; ++q2) {
            if (q1 == 0) continue;  // electron parked in dot 0: no pulse touches it

            const bool blocker_present = (q2 == 0);  // qubit-2 electron in dot 4
            complex<double> amp = 1.0;
            int pos = 1;  // loop electron starts in r1 = dot 1
            for (const auto& segment : schedule.segments) {
                const auto& al = segment.activation.links.front();
                int dest;
                if (pos == al.a) dest = al.b;
                else if (pos == al.b) dest = al.a;
                else continue;

                if (blocker_present && dest == 3) continue;  // Coulomb-blocked hop

                const TunnelLink* link = spec.find_link(al.a, al.b);
                const double theta = (link->a == pos) ? link->phase : -link->phase;
                amp *= transfer * std::exp(complex<double>(0.0, theta));
                pos = dest;
            }
            amps(2 * q1 + q2) = amp;
        }
    }
    return amps;
}

GateReport run_triangle_gate(const DotArraySpec& spec, const TriangleScenario& s, double flux) {
    const FockBasis basis = enumerate_basis(6, 2);
    const PulseSchedule schedule = build_triangle_schedule(s);
    const Unitary u = run_schedule(spec, basis, schedule);

    GateReport report = make_gate_report(u, basis, triangle_encoding(),
                                         ideal_triangle_amplitudes(s, flux));
    if (s.coulomb / s.tunneling < 10.0)
        report.warnings.push_back("U/J = " + std::to_string(s.coulomb / s.tunneling) +
                                  " is below 10: Coulomb blockade is weak");
    return report;
}

std::pair<GateReport, GateReport> triangle_ab_scenario(const TriangleScenario& s) {
    GateReport at_flux = run_triangle_gate(make_triangle_spec(s, s.flux), s, s.flux);
    GateReport at_zero = run_triangle_gate(make_triangle_spec(s, 0.0), s, 0.0);
    return {std::move(at_flux), std::move(at_zero)};
}

GateReport dynamical_gate_scenario(double delta_e, double t) {
    if (delta_e <= 0.0)
        throw ArgumentError("dynamical_gate_scenario: delta_e must be positive");
    if (!(t >= 0.0) || !std::isfinite(t))
        throw ArgumentError("dynamical_gate_scenario: time must be finite and non-negative");

    // Two double-dot qubits side by side; the Coulomb shift acts between the
    // adjacent inner dots r1 = 1 and l2 = 2. No links: tunneling stays off
    // for the whole gate.
    DotArraySpec spec;
    spec.n_dots = 4;
    spec.dot_energies.assign(4, 0.0);
    spec.coulomb_pairs = {CoulombPair{1, 2, delta_e}};
    spec.validate();

    const FockBasis basis = enumerate_basis(4, 2);
    PulseSchedule schedule;
    schedule.segments.push_back(PulseSegment{LinkActivation::none(), t});
    const Unitary u = run_schedule(spec, basis, schedule);

    return make_gate_report(u, basis, dynamical_encoding(),
                            TargetGate::dynamical(delta_e * t).diagonal());
}

BlockadeResult blockade_leakage(double tunneling, double coulomb) {
    if (tunneling <= 0.0 || coulomb <= 0.0)
        throw ArgumentError("blockade_leakage: tunneling and Coulomb strength must be positive");

    TriangleScenario s;
    s.tunneling = tunneling;
    s.coulomb = coulomb;
    const DotArraySpec spec = make_triangle_spec(s, 0.0);
    const FockBasis basis = enumerate_basis(6, 2);
    const OperatorMatrix h = build_hamiltonian(spec, basis, LinkActivation::single(2, 3));

    const int start = basis.index_of((FockState{1} << 2) | (FockState{1} << 4));
    const int blocked = basis.index_of((FockState{1} << 3) | (FockState{1} << 4));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    const Eigen::RowVectorXcd from = solver.eigenvectors().row(start).conjugate();
    const Eigen::RowVectorXcd to = solver.eigenvectors().row(blocked);
    const Eigen::RowVectorXcd weights = to.cwiseProduct(from);
    const Eigen::VectorXd energies = solver.eigenvalues();

    // Scan the pulse window densely enough to resolve the fast detuned Rabi
    // oscillation and record the peak transfer probability.
    const double duration = constants::pi / (2.0 * tunneling);
    const double rabi = std::sqrt(tunneling * tunneling + 0.25 * coulomb * coulomb);
    const int samples = std::max(4096, static_cast<int>(std::ceil(rabi * duration * 64.0 / constants::pi)));

    double peak = 0.0;
    for (int k = 1; k <= samples; ++k) {
        const double t = duration * k / samples;
        complex<double> amp = 0.0;
        for (Eigen::Index e = 0; e < energies.size(); ++e)
            amp += weights(e) * std::exp(complex<double>(0.0, -energies(e) * t));
        peak = std::max(peak, std::norm(amp));
    }
    return {peak, 2.0 * tunneling * tunneling / coulomb};
}

std::vector<TimingSweepRow> timing_robustness_sweep(const TriangleScenario& s,
                                                    std::span<const double> eps_grid) {
    for (double eps : eps_grid)
        if (!(eps > -0.5 && eps < 0.5))
            throw ArgumentError("timing_robustness_sweep: epsilon must lie in (-0.5, 0.5)");

    std::vector<TimingSweepRow> rows;
    rows.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        TriangleScenario run = s;
        run.timing_error = eps;
        auto [at_flux, at_zero] = triangle_ab_scenario(run);

        TimingSweepRow row;
        row.epsilon = eps;
        row.leakage_max = std::max(at_flux.max_leakage(), at_zero.max_leakage());
        row.degenerate = at_flux.degenerate || at_zero.degenerate;
        if (row.degenerate) {
            row.gamma_dev = std::numeric_limits<double>::quiet_NaN();
            row.fidelity = std::numeric_limits<double>::quiet_NaN();
        } else {
            row.gamma_dev = wrap_pi(at_flux.entangling_phase - at_zero.entangling_phase -
                                    s.windings * s.flux);
            row.fidelity = std::min(at_flux.fidelity_vs_target, at_zero.fidelity_vs_target);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace qdot
