// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qdot/angle.hpp"
#include "qdot/constants.hpp"
#include "qdot/errors.hpp"
#include "qdot/protocols.hpp"

using namespace qdot;
using std::complex;

namespace {

// Detuned-Rabi envelope: peak transfer probability of a two-level system
// with coupling J and detuning U.
double rabi_envelope(double j, double u) {
    return j * j / (j * j + 0.25 * u * u);
}

double gamma_diff(const std::pair<GateReport, GateReport>& reports) {
    return wrap_pi(reports.first.entangling_phase - reports.second.entangling_phase);
}

TriangleScenario base_scenario(double flux) {
    TriangleScenario s;
    s.tunneling = 1.0;
    s.coulomb = 1e4;
    s.flux = flux;
    return s;
}

} // namespace

TEST_CASE("dynamical gate at the pi point") {
    const double delta_e = 1.3;
    const GateReport report = dynamical_gate_scenario(delta_e, constants::pi / delta_e);
    CHECK(std::abs(std::abs(report.entangling_phase) - constants::pi) < 1e-12);
    CHECK(report.fidelity_vs_target == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.max_leakage() < 1e-12);
    CHECK(report.offdiag_residual < 1e-14);
}

TEST_CASE("dynamical gate is periodic and trivial at t = 0") {
    const double delta_e = 0.7;
    const GateReport at_zero = dynamical_gate_scenario(delta_e, 0.0);
    CHECK(at_zero.entangling_phase == doctest::Approx(0.0));
    CHECK(max_abs(at_zero.projected - Eigen::Matrix4cd::Identity()) < 1e-14);

    const GateReport full_period = dynamical_gate_scenario(delta_e, 2.0 * constants::pi / delta_e);
    CHECK(std::abs(wrap_pi(full_period.entangling_phase)) < 1e-12);
}

TEST_CASE("dynamical gate phase grows as delta_e times t") {
    // The Coulomb-shifted branch |10> evolves with e^{-i dE t}, so
    // gamma = + dE t (mod 2 pi).
    const double delta_e = 1.0;
    const GateReport report = dynamical_gate_scenario(delta_e, 0.7);
    CHECK(report.entangling_phase == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(std::abs(report.projected(2, 2) - std::exp(complex<double>(0.0, -0.7))) < 1e-12);
}

TEST_CASE("triangle schedule layout") {
    TriangleScenario s = base_scenario(0.0);
    const PulseSchedule one = build_triangle_schedule(s);
    REQUIRE(one.segments.size() == 4);
    for (const auto& segment : one.segments)
        CHECK(segment.duration == doctest::Approx(constants::pi / 2.0));

    s.windings = 2;
    CHECK(build_triangle_schedule(s).segments.size() == 8);

    s.windings = 1;
    s.deformations = {Deformation{2, 2, 3}};
    CHECK(build_triangle_schedule(s).segments.size() == 6);

    s.deformations = {Deformation{0, 0, 1}};  // (0,1) is not a triangle link
    CHECK_THROWS_AS(build_triangle_schedule(s), ArgumentError);
    s.deformations = {Deformation{9, 2, 3}};
    CHECK_THROWS_AS(build_triangle_schedule(s), ArgumentError);

    s.deformations.clear();
    s.timing_error = 0.25;
    CHECK(build_triangle_schedule(s).segments.front().duration ==
          doctest::Approx(constants::pi / 2.0 * 1.25));
}

TEST_CASE("triangle spec loop flux equals the scenario flux") {
    const TriangleScenario s = base_scenario(0.0);
    for (double flux : {0.0, 0.7, -2.1}) {
        const DotArraySpec spec = make_triangle_spec(s, flux);
        const std::array<int, 3> cycle{1, 2, 3};
        CHECK(loop_flux(spec, cycle) == doctest::Approx(wrap_pi(flux)));
    }
}

TEST_CASE("ideal branch amplitudes") {
    const double flux = 0.9;
    const Eigen::Vector4cd amps = ideal_triangle_amplitudes(base_scenario(flux), flux);
    CHECK(std::abs(amps(0) - complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(amps(1) - complex<double>(1.0, 0.0)) < 1e-15);
    // Blocked branch: two completed transfers, (-i)^2.
    CHECK(std::abs(amps(2) - complex<double>(-1.0, 0.0)) < 1e-15);
    // Free branch: three transfers and the flux link, (-i)^3 e^{i flux}.
    const complex<double> expected = complex<double>(0.0, 1.0) * std::exp(complex<double>(0.0, flux));
    CHECK(std::abs(amps(3) - expected) < 1e-15);
}

TEST_CASE("flux difference equals the loop flux") {
    const TriangleScenario s = base_scenario(1.0);
    const auto reports = triangle_ab_scenario(s);
    CHECK(std::abs(gamma_diff(reports) - 1.0) < 1e-3);
    CHECK(reports.first.max_leakage() < 1e-6);
    CHECK(reports.second.max_leakage() < 1e-6);
    CHECK(reports.first.fidelity_vs_target > 1.0 - 1e-6);
    CHECK(reports.second.fidelity_vs_target > 1.0 - 1e-6);

    // Inert branches: the schedule never touches dot 0.
    CHECK(std::abs(reports.first.projected(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(reports.first.projected(1, 1) - 1.0) < 1e-12);
    CHECK(reports.first.leakage[0] < 1e-12);
    CHECK(reports.first.leakage[1] < 1e-12);
    CHECK(reports.first.offdiag_residual < 1e-12);
}

TEST_CASE("zero flux gives identical reports") {
    const TriangleScenario s = base_scenario(0.0);
    const auto reports = triangle_ab_scenario(s);
    CHECK(std::abs(gamma_diff(reports)) < 1e-12);
    CHECK(max_abs(reports.first.projected - reports.second.projected) < 1e-12);
}

TEST_CASE("two windings double the flux phase") {
    TriangleScenario s = base_scenario(2.5);
    s.windings = 2;
    const auto reports = triangle_ab_scenario(s);
    CHECK(std::abs(wrap_pi(gamma_diff(reports) - 2.0 * 2.5)) < 1e-3);
}

TEST_CASE("deformations shift gamma but not the flux difference") {
    const TriangleScenario s = base_scenario(1.1);
    const auto base = triangle_ab_scenario(s);

    TriangleScenario deformed = s;
    deformed.deformations = {Deformation{2, 2, 3}};
    const auto bent = triangle_ab_scenario(deformed);

    CHECK(std::abs(wrap_pi(gamma_diff(bent) - gamma_diff(base))) < 1e-6);
    // The inserted back-and-forth multiplies the free branch by (-i)^2.
    CHECK(std::abs(wrap_pi(bent.first.entangling_phase - base.first.entangling_phase)) > 0.5);
}

TEST_CASE("gauge transforms leave the reports invariant") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> chi_dist(-3.1, 3.1);
    const TriangleScenario s = base_scenario(0.8);
    const DotArraySpec spec = make_triangle_spec(s, s.flux);
    const GateReport base = run_triangle_gate(spec, s, s.flux);

    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> chi;
        for (int d = 0; d < 6; ++d) chi.push_back(chi_dist(rng));
        const GateReport transformed = run_triangle_gate(gauge_transform(spec, chi), s, s.flux);
        CHECK(std::abs(transformed.entangling_phase - base.entangling_phase) < 1e-10);
        CHECK(std::abs(transformed.max_leakage() - base.max_leakage()) < 1e-10);
        CHECK(std::abs(transformed.fidelity_vs_target - base.fidelity_vs_target) < 1e-10);
    }
}

TEST_CASE("truncated schedule parks the electron in an ancilla") {
    const TriangleScenario s = base_scenario(0.0);
    const DotArraySpec spec = make_triangle_spec(s, 0.0);
    const FockBasis basis = enumerate_basis(6, 2);

    PulseSchedule first_pulse;
    first_pulse.segments = {build_triangle_schedule(s).segments.front()};
    const Unitary u = run_schedule(spec, basis, first_pulse);
    const auto [block, leakage] = project_computational(u, basis, triangle_encoding());

    // Columns with the qubit-1 electron in r1 moved it to dot 2.
    CHECK(leakage[2] > 1.0 - 1e-9);
    CHECK(leakage[3] > 1.0 - 1e-9);
    CHECK(leakage[0] < 1e-12);
    CHECK(leakage[1] < 1e-12);
}

TEST_CASE("blockade effective tunneling and envelope") {
    const BlockadeResult r100 = blockade_leakage(1.0, 100.0);
    CHECK(r100.effective_tunneling == 2.0 * 1.0 * 1.0 / 100.0);  // exactly 2 J^2 / U
    CHECK(r100.leakage == doctest::Approx(rabi_envelope(1.0, 100.0)).epsilon(0.01));

    const BlockadeResult r200 = blockade_leakage(1.0, 200.0);
    const double ratio = r100.leakage / r200.leakage;
    CHECK(ratio > 4.0 * 0.8);
    CHECK(ratio < 4.0 * 1.2);
}

TEST_CASE("blockade leakage decreases monotonically over a decade") {
    double previous = 1.0;
    for (double u : {1e2, 2e2, 5e2, 1e3}) {
        const double leak = blockade_leakage(1.0, u).leakage;
        CHECK(leak < previous);
        previous = leak;
    }
}

TEST_CASE("blockade log-log slope is minus two") {
    std::vector<double> log_u;
    std::vector<double> log_p;
    for (double u : {1e2, 3.16e2, 1e3, 3.16e3, 1e4}) {
        log_u.push_back(std::log(u));
        log_p.push_back(std::log(blockade_leakage(1.0, u).leakage));
    }
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t k = 0; k < log_u.size(); ++k) {
        mean_x += log_u[k];
        mean_y += log_p[k];
    }
    mean_x /= log_u.size();
    mean_y /= log_p.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < log_u.size(); ++k) {
        sxx += (log_u[k] - mean_x) * (log_u[k] - mean_x);
        sxy += (log_u[k] - mean_x) * (log_p[k] - mean_y);
    }
    const double slope = sxy / sxx;
    CHECK(slope == doctest::Approx(-2.0).epsilon(0.05));
}

TEST_CASE("weak blockade earns a warning") {
    TriangleScenario s;
    s.tunneling = 1.0;
    s.coulomb = 5.0;
    s.flux = 0.3;
    const auto reports = triangle_ab_scenario(s);
    REQUIRE(!reports.first.warnings.empty());
}

TEST_CASE("timing sweep rows") {
    const TriangleScenario s = base_scenario(1.0);
    const std::vector<double> grid{-0.01, 0.0, 0.01};
    const auto rows = timing_robustness_sweep(s, grid);
    REQUIRE(rows.size() == 3);

    CHECK(rows[1].epsilon == 0.0);
    CHECK(std::abs(rows[1].gamma_dev) < 1e-6);
    CHECK(rows[1].leakage_max < 1e-6);

    CHECK(rows[0].leakage_max > 1e-8);
    CHECK(rows[2].leakage_max > 1e-8);

    const std::vector<double> bad{0.6};
    CHECK_THROWS_AS(timing_robustness_sweep(s, bad), ArgumentError);
}

TEST_CASE("scenario validation") {
    TriangleScenario s;
    s.tunneling = -1.0;
    CHECK_THROWS_AS(make_triangle_spec(s, 0.0), ArgumentError);
    s.tunneling = 1.0;
    s.coulomb = 0.0;
    CHECK_THROWS_AS(make_triangle_spec(s, 0.0), ArgumentError);
    CHECK_THROWS_AS(dynamical_gate_scenario(-1.0, 1.0), ArgumentError);
    CHECK_THROWS_AS(dynamical_gate_scenario(1.0, -1.0), ArgumentError);
}
