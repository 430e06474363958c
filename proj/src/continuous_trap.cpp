// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdot/continuous_trap.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "qdot/angle.hpp"
#include "qdot/errors.hpp"
#include "qdot/scalar_min.hpp"

namespace qdot {

FieldSpec FieldSpec::uniform(double b) {
    FieldSpec f;
    f.kind = Kind::uniform;
    f.b = b;
    return f;
}

FieldSpec FieldSpec::solenoid(const Eigen::Vector2d& position, double flux) {
    if (!position.allFinite())
        throw ArgumentError("FieldSpec: solenoid position must be finite");
    FieldSpec f;
    f.kind = Kind::solenoid;
    f.position = position;
    f.flux = flux;
    return f;
}

Trajectory circle_path(const Eigen::Vector2d& center, double radius, int samples) {
    if (samples < 3)
        throw ArgumentError("circle_path: need at least 3 samples");
    Trajectory t;
    t.closed = true;
    t.points.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double a = 2.0 * constants::pi * k / samples;
        t.points.emplace_back(center.x() + radius * std::cos(a),
                              center.y() + radius * std::sin(a));
    }
    return t;
}

double equilibrium_displacement(double omega, double mass, double coulomb_constant) {
    if (omega <= 0.0)
        throw ArgumentError("equilibrium_displacement: omega must be positive");
    if (mass <= 0.0 || coulomb_constant <= 0.0)
        throw ArgumentError("equilibrium_displacement: mass and Coulomb constant must be positive");

    const double stiffness = mass * omega * omega;
    auto df = [&](double x) { return stiffness * x - coulomb_constant / (x * x); };
    auto d2f = [&](double x) { return stiffness + 2.0 * coulomb_constant / (x * x * x); };

    // Expand a sign-change bracket for V'(x); V is unimodal on (0, inf).
    double lo = 1e-18;
    double hi = 1.0;
    while (df(hi) < 0.0 && hi < 1e12) hi *= 4.0;
    while (df(lo) > 0.0 && lo > 1e-300) lo *= 0.25;
    return minimize_newton_bracketed(df, d2f, lo, hi);
}

double equilibrium_displacement(double omega) {
    return equilibrium_displacement(omega, constants::electron_mass, constants::coulomb_e2);
}

namespace {

double bbox_diagonal(const std::vector<Eigen::Vector2d>& pts) {
    if (pts.empty()) return 0.0;
    Eigen::Vector2d lo = pts.front();
    Eigen::Vector2d hi = pts.front();
    for (const auto& p : pts) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    return (hi - lo).norm();
}

// Damped Newton descent on V(p) = m w^2 |p - c|^2 / 2 + k / |p - q|,
// warm-started from `start`.
Eigen::Vector2d settle_electron(const TrapModel& model, const Eigen::Vector2d& trap_center,
                                const Eigen::Vector2d& repeller, Eigen::Vector2d start) {
    const double stiffness = model.mass * model.omega * model.omega;
    const double k = model.coulomb_constant;

    auto potential = [&](const Eigen::Vector2d& p) {
        const double r = (p - repeller).norm();
        return 0.5 * stiffness * (p - trap_center).squaredNorm() + k / r;
    };

    Eigen::Vector2d p = start;
    for (int it = 0; it < 100; ++it) {
        const Eigen::Vector2d d = p - repeller;
        const double r = d.norm();
        const Eigen::Vector2d grad = stiffness * (p - trap_center) - k * d / (r * r * r);
        const Eigen::Matrix2d hess = stiffness * Eigen::Matrix2d::Identity() +
                                     (k / std::pow(r, 5)) *
                                         (3.0 * d * d.transpose() - r * r * Eigen::Matrix2d::Identity());

        Eigen::Vector2d step = -hess.fullPivLu().solve(grad);
        if (!step.allFinite() || step.dot(grad) >= 0.0)
            step = -grad / stiffness;  // fall back to a trap-scaled gradient step

        const double v0 = potential(p);
        double scale = 1.0;
        Eigen::Vector2d next = p + step;
        int backtracks = 0;
        while (backtracks < 60 && (!next.allFinite() || potential(next) > v0)) {
            scale *= 0.5;
            next = p + scale * step;
            ++backtracks;
        }
        const double moved = (next - p).norm();
        p = next;
        if (moved <= 1e-14 * (1.0 + p.norm())) break;
    }
    return p;
}

} // namespace

Trajectory adiabatic_trajectory(const TrapModel& model, const Trajectory& trap_path) {
    if (!trap_path.closed)
        throw ArgumentError("adiabatic_trajectory: trap path must be closed");
    if (trap_path.points.size() < 16)
        throw ArgumentError("adiabatic_trajectory: trap path needs at least 16 samples");
    for (const auto& c : trap_path.points)
        if (!c.allFinite())
            throw ArgumentError("adiabatic_trajectory: trap path has non-finite coordinates");
    if (model.omega <= 0.0 || model.mass <= 0.0)
        throw ArgumentError("adiabatic_trajectory: omega and mass must be positive");

    if (!model.other_electron) {
        Trajectory out = trap_path;
        out.closed = true;
        return out;
    }

    const Eigen::Vector2d q = *model.other_electron;
    const double diag = bbox_diagonal(trap_path.points);
    for (const auto& c : trap_path.points) {
        const double sep = (c - q).norm();
        if (sep == 0.0 || sep < model.exclusion_radius)
            throw ArgumentError("adiabatic_trajectory: trap path enters the exclusion radius "
                                "of the stationary electron");
    }

    Trajectory out;
    out.closed = true;
    out.points.reserve(trap_path.points.size());

    // First-order displaced guess for the first trap center.
    const Eigen::Vector2d c0 = trap_path.points.front();
    const double s0 = (c0 - q).norm();
    const double stiffness = model.mass * model.omega * model.omega;
    Eigen::Vector2d warm =
        c0 + (model.coulomb_constant / (stiffness * s0 * s0)) * (c0 - q).normalized();

    for (std::size_t k = 0; k < trap_path.points.size(); ++k) {
        const Eigen::Vector2d& c = trap_path.points[k];
        const Eigen::Vector2d p = settle_electron(model, c, q, warm);
        if (k > 0) {
            const double path_step = (c - trap_path.points[k - 1]).norm();
            const double jump = (p - out.points.back()).norm();
            if (jump > 10.0 * path_step + 1e-12 * diag)
                throw AdiabaticityError("adiabatic_trajectory: tracked minimum jumped by " +
                                        std::to_string(jump) + " at sample " + std::to_string(k));
        }
        out.points.push_back(p);
        warm = p;
    }
    return out;
}

double enclosed_area(const Trajectory& traj) {
    if (!traj.closed)
        throw ArgumentError("enclosed_area: trajectory must be closed");
    if (traj.points.size() < 3)
        throw ArgumentError("enclosed_area: need at least 3 points");

    double twice_area = 0.0;
    const std::size_t n = traj.points.size();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& a = traj.points[k];
        const auto& b = traj.points[(k + 1) % n];
        twice_area += a.x() * b.y() - b.x() * a.y();
    }
    return 0.5 * twice_area;
}

int winding_number(const Trajectory& traj, const Eigen::Vector2d& p, double delta_rel) {
    if (!traj.closed)
        throw ArgumentError("winding_number: trajectory must be closed");
    if (traj.points.size() < 3)
        throw ArgumentError("winding_number: need at least 3 points");

    const double tol = delta_rel * bbox_diagonal(traj.points);
    const std::size_t n = traj.points.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Eigen::Vector2d a = traj.points[k];
        const Eigen::Vector2d b = traj.points[(k + 1) % n];
        const Eigen::Vector2d ab = b - a;
        const double len2 = ab.squaredNorm();
        const double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
        const double dist = (p - (a + t * ab)).norm();
        if (dist <= tol)
            throw DegenerateGeometryError("winding_number: point lies on the trajectory "
                                          "(distance " + std::to_string(dist) + ")");
    }

    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const Eigen::Vector2d u = traj.points[k] - p;
        const Eigen::Vector2d v = traj.points[(k + 1) % n] - p;
        total += std::atan2(u.x() * v.y() - u.y() * v.x(), u.dot(v));
    }
    return static_cast<int>(std::lround(total / (2.0 * constants::pi)));
}

double ab_phase(const Trajectory& traj, const FieldSpec& field, Units units,
                PhaseConvention convention) {
    double prefactor = 1.0;
    if (units == Units::si) {
        prefactor = convention == PhaseConvention::reduced_planck
                        ? constants::elementary_charge / constants::hbar
                        : constants::elementary_charge / constants::planck_h;
    }
    switch (field.kind) {
        case FieldSpec::Kind::uniform:
            return prefactor * field.b * enclosed_area(traj);
        case FieldSpec::Kind::solenoid:
            return prefactor * field.flux * winding_number(traj, field.position);
    }
    return 0.0;
}

GeometricGateResult geometric_gate_report(const TrapModel& model, const Trajectory& trap_path,
                                          const FieldSpec& field, Units units) {
    GeometricGateResult result;

    TrapModel free_model = model;
    free_model.other_electron.reset();
    result.free_loop = adiabatic_trajectory(free_model, trap_path);
    result.repelled_loop = adiabatic_trajectory(model, trap_path);

    result.phi1 = ab_phase(result.free_loop, field, units);
    result.phi2 = ab_phase(result.repelled_loop, field, units);

    // Conditional phases sit on the qubit-1-active branches |10> and |11>;
    // the qubit-2 electron repels only in its |0> (near) position.
    Eigen::Vector4cd diag;
    diag << 1.0, 1.0, std::exp(std::complex<double>(0.0, result.phi2)),
        std::exp(std::complex<double>(0.0, result.phi1));

    GateReport& report = result.report;
    report.projected = diag.asDiagonal();
    report.leakage = {0.0, 0.0, 0.0, 0.0};
    for (int k = 0; k < 4; ++k)
        report.diagonal_phases[static_cast<std::size_t>(k)] = std::arg(diag(k));
    report.offdiag_residual = 0.0;
    report.entangling_phase = entangling_phase(report.projected);
    report.fidelity_vs_target =
        phase_gate_fidelity(report.projected, TargetGate::geometric(result.phi1, result.phi2).diagonal());

    if (field.kind == FieldSpec::Kind::solenoid) {
        const int w_free = winding_number(result.free_loop, field.position);
        const int w_rep = winding_number(result.repelled_loop, field.position);
        if (w_free == w_rep)
            report.warnings.push_back(
                "solenoid has equal winding (" + std::to_string(w_free) +
                ") for both branches: the gate carries no flux dependence");
    }
    return result;
}

} // namespace qdot
