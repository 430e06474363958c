// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdot/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "qdot/angle.hpp"
#include "qdot/errors.hpp"
#include "qdot/protocols.hpp"
#include "qdot/version.hpp"

namespace qdot {

namespace fs = std::filesystem;

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::string gate_csv(const Eigen::Matrix4cd& gate) {
    std::string out = "row,col,re,im\n";
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out += std::to_string(r) + "," + std::to_string(c) + "," +
                   format_number(gate(r, c).real()) + "," + format_number(gate(r, c).imag()) + "\n";
    return out;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "x,y\n";
    for (const auto& p : traj.points)
        out += format_number(p.x()) + "," + format_number(p.y()) + "\n";
    return out;
}

TriangleScenario triangle_from_params(const Json& params) {
    TriangleScenario s;
    s.tunneling = params.at("J").get<double>();
    s.coulomb = params.at("U").get<double>();
    s.flux = params.at("phi").get<double>();
    if (params.contains("windings")) s.windings = params["windings"].get<int>();
    if (params.contains("timing_error")) s.timing_error = params["timing_error"].get<double>();
    if (params.contains("deformations"))
        for (const auto& d : params["deformations"])
            s.deformations.push_back(Deformation{d.at("after_segment").get<int>(),
                                                 d.at("link")[0].get<int>(),
                                                 d.at("link")[1].get<int>()});
    return s;
}

Eigen::Vector2d vec2_from(const Json& j) {
    return {j[0].get<double>(), j[1].get<double>()};
}

Trajectory path_from_params(const Json& path) {
    const std::string kind = path.at("kind").get<std::string>();
    if (kind == "circle")
        return circle_path(vec2_from(path.at("center")), path.at("radius").get<double>(),
                           path.at("samples").get<int>());
    Trajectory t;
    t.closed = true;
    for (const auto& p : path.at("points")) t.points.push_back(vec2_from(p));
    return t;
}

FieldSpec field_from_params(const Json& field) {
    const std::string kind = field.at("kind").get<std::string>();
    if (kind == "uniform") return FieldSpec::uniform(field.at("b").get<double>());
    return FieldSpec::solenoid(vec2_from(field.at("position")), field.at("flux").get<double>());
}

TrapModel trap_from_params(const Json& params) {
    TrapModel model;
    model.omega = params.at("omega").get<double>();
    if (params.contains("mass")) model.mass = params["mass"].get<double>();
    if (params.contains("coulomb_constant"))
        model.coulomb_constant = params["coulomb_constant"].get<double>();
    if (params.contains("exclusion_radius"))
        model.exclusion_radius = params["exclusion_radius"].get<double>();
    model.other_electron = vec2_from(params.at("other_electron"));
    return model;
}

void append_gate_metrics(ScenarioResult& result, const GateReport& report) {
    result.metrics.emplace_back("gamma", report.entangling_phase);
    result.metrics.emplace_back("fidelity", report.fidelity_vs_target);
    result.metrics.emplace_back("leakage_max", report.max_leakage());
    result.metrics.emplace_back("offdiag_residual", report.offdiag_residual);
}

std::string timing_rows_csv(const std::vector<TimingSweepRow>& rows) {
    std::string csv = "epsilon,leakage_max,gamma_dev,fidelity\n";
    for (const auto& row : rows)
        csv += format_number(row.epsilon) + "," + format_number(row.leakage_max) + "," +
               format_number(row.gamma_dev) + "," + format_number(row.fidelity) + "\n";
    return csv;
}

} // namespace

ScenarioResult evaluate_scenario(const ScenarioConfig& cfg) {
    if (!cfg.sweep_axes.empty())
        throw ConfigError(ConfigError::Category::bad_value,
                          "config contains sweep axes; use the sweep subcommand");

    ScenarioResult result;
    const Json& params = cfg.params;

    switch (cfg.kind) {
        case ScenarioKind::dynamical: {
            const GateReport report = dynamical_gate_scenario(params.at("delta_e").get<double>(),
                                                              params.at("t").get<double>());
            append_gate_metrics(result, report);
            result.warnings = report.warnings;
            result.csv_files.emplace_back("gate.csv", gate_csv(report.projected));
            break;
        }
        case ScenarioKind::triangle_ab: {
            const TriangleScenario s = triangle_from_params(params);
            const auto [at_flux, at_zero] = triangle_ab_scenario(s);
            if (at_flux.degenerate || at_zero.degenerate)
                throw DegenerateGateError(
                    "triangle gate is not phase-like at timing_error = " +
                    format_number(s.timing_error));
            const double diff =
                wrap_pi(at_flux.entangling_phase - at_zero.entangling_phase);
            result.metrics.emplace_back("gamma_flux", at_flux.entangling_phase);
            result.metrics.emplace_back("gamma_zero", at_zero.entangling_phase);
            result.metrics.emplace_back("gamma_diff", diff);
            result.metrics.emplace_back("gamma_dev", wrap_pi(diff - s.windings * s.flux));
            result.metrics.emplace_back(
                "leakage_max", std::max(at_flux.max_leakage(), at_zero.max_leakage()));
            result.metrics.emplace_back(
                "fidelity", std::min(at_flux.fidelity_vs_target, at_zero.fidelity_vs_target));
            result.warnings = at_flux.warnings;
            result.csv_files.emplace_back("gate_flux.csv", gate_csv(at_flux.projected));
            result.csv_files.emplace_back("gate_zero.csv", gate_csv(at_zero.projected));
            break;
        }
        case ScenarioKind::blockade: {
            const double j = params.at("J").get<double>();
            const double u = params.at("U").get<double>();
            const BlockadeResult res = blockade_leakage(j, u);
            result.metrics.emplace_back("leakage", res.leakage);
            result.metrics.emplace_back("i_eff", res.effective_tunneling);
            std::string csv = "J,U,leakage,i_eff\n";
            csv += format_number(j) + "," + format_number(u) + "," +
                   format_number(res.leakage) + "," + format_number(res.effective_tunneling) + "\n";
            result.csv_files.emplace_back("blockade.csv", csv);
            break;
        }
        case ScenarioKind::timing_sweep: {
            TriangleScenario s;
            {
                Json base = params;
                base.erase("eps_grid");
                s = triangle_from_params(base);
            }
            std::vector<double> grid;
            for (const auto& v : params.at("eps_grid")) grid.push_back(v.get<double>());
            const auto rows = timing_robustness_sweep(s, grid);
            double max_leak = 0.0;
            double max_dev = 0.0;
            for (const auto& row : rows) {
                max_leak = std::max(max_leak, row.leakage_max);
                if (!row.degenerate) max_dev = std::max(max_dev, std::abs(row.gamma_dev));
            }
            result.metrics.emplace_back("points", static_cast<double>(rows.size()));
            result.metrics.emplace_back("max_leakage", max_leak);
            result.metrics.emplace_back("max_abs_gamma_dev", max_dev);
            result.csv_files.emplace_back("sweep.csv", timing_rows_csv(rows));
            break;
        }
        case ScenarioKind::continuous_geometric: {
            const TrapModel model = trap_from_params(params);
            const Trajectory path = path_from_params(params.at("path"));
            const FieldSpec field = field_from_params(params.at("field"));
            const GeometricGateResult res = geometric_gate_report(model, path, field, cfg.units);
            result.metrics.emplace_back("phi1", res.phi1);
            result.metrics.emplace_back("phi2", res.phi2);
            result.metrics.emplace_back("gamma", res.report.entangling_phase);
            result.metrics.emplace_back("fidelity", res.report.fidelity_vs_target);
            result.metrics.emplace_back("area_free", enclosed_area(res.free_loop));
            result.metrics.emplace_back("area_repelled", enclosed_area(res.repelled_loop));
            if (cfg.units == Units::si) {
                // Same loops under the e/h convention, for comparison.
                result.metrics.emplace_back(
                    "phi1_planck", ab_phase(res.free_loop, field, Units::si, PhaseConvention::planck));
                result.metrics.emplace_back(
                    "phi2_planck",
                    ab_phase(res.repelled_loop, field, Units::si, PhaseConvention::planck));
            }
            result.warnings = res.report.warnings;
            result.csv_files.emplace_back("trajectory_free.csv", trajectory_csv(res.free_loop));
            result.csv_files.emplace_back("trajectory_repelled.csv",
                                          trajectory_csv(res.repelled_loop));
            break;
        }
        case ScenarioKind::displacement: {
            const double omega = params.at("omega").get<double>();
            const double mass = params.contains("mass") ? params["mass"].get<double>()
                                                        : constants::electron_mass;
            const double k = params.contains("coulomb_constant")
                                 ? params["coulomb_constant"].get<double>()
                                 : constants::coulomb_e2;
            const double dx = equilibrium_displacement(omega, mass, k);
            const double closed = std::cbrt(k / (mass * omega * omega));
            result.metrics.emplace_back("delta_x", dx);
            result.metrics.emplace_back("delta_x_closed_form", closed);
            std::string csv = "omega,delta_x,delta_x_closed_form\n";
            csv += format_number(omega) + "," + format_number(dx) + "," + format_number(closed) + "\n";
            result.csv_files.emplace_back("displacement.csv", csv);
            break;
        }
    }
    return result;
}

std::vector<std::string> metric_columns(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::dynamical:
            return {"gamma", "fidelity", "leakage_max", "offdiag_residual"};
        case ScenarioKind::triangle_ab:
            return {"gamma_flux", "gamma_zero", "gamma_diff", "gamma_dev", "leakage_max", "fidelity"};
        case ScenarioKind::blockade:
            return {"leakage", "i_eff"};
        case ScenarioKind::timing_sweep:
            return {};  // not grid-sweepable; produces its own table
        case ScenarioKind::continuous_geometric:
            return {"phi1", "phi2", "gamma", "fidelity", "area_free", "area_repelled"};
        case ScenarioKind::displacement:
            return {"delta_x", "delta_x_closed_form"};
    }
    return {};
}

namespace {

void write_file_atomic(const fs::path& dir, const std::string& name, const std::string& content) {
    const fs::path tmp = dir / (name + ".tmp");
    const fs::path final_path = dir / name;
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, final_path);
}

std::string report_header(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "tool: qdotsim " << version << "\n";
    out << "config_hash: " << config_hash(cfg) << "\n";
    out << "kind: " << kind_name(cfg.kind) << "\n";
    out << "units: " << (cfg.units == Units::si ? "si" : "natural") << "\n";
    for (const auto& item : cfg.params.items()) {
        if (item.value().is_number())
            out << "param " << item.key() << ": " << format_number(item.value().get<double>())
                << "\n";
        else
            out << "param " << item.key() << ": " << item.value().dump() << "\n";
    }
    return out.str();
}

} // namespace

void run_scenario(const ScenarioConfig& cfg, const std::string& out_dir) {
    const ScenarioResult result = evaluate_scenario(cfg);

    std::ostringstream report;
    report << report_header(cfg);
    for (const auto& [name, value] : result.metrics)
        report << name << ": " << format_number(value) << "\n";
    for (const auto& warning : result.warnings) report << "warning: " << warning << "\n";

    fs::create_directories(out_dir);
    write_file_atomic(out_dir, "report.txt", report.str());
    for (const auto& [name, content] : result.csv_files)
        write_file_atomic(out_dir, name, content);
}

void run_sweep(const ScenarioConfig& cfg, const std::string& out_dir, int workers) {
    if (cfg.kind == ScenarioKind::timing_sweep)
        throw ConfigError(ConfigError::Category::bad_value,
                          "timing_sweep emits its own table; use the run subcommand");

    const auto& axes = cfg.sweep_axes;
    std::size_t total = 1;
    for (const auto& axis : axes) total *= axis.values.size();

    const std::vector<std::string> columns = metric_columns(cfg.kind);

    struct Row {
        std::vector<double> axis_values;
        std::vector<double> metrics;
        std::string error;
    };
    std::vector<Row> rows(total);

    auto evaluate_point = [&](std::size_t index) {
        Row& row = rows[index];
        row.axis_values.resize(axes.size());
        // Decode the grid index, first axis slowest.
        std::size_t rest = index;
        for (std::size_t a = axes.size(); a-- > 0;) {
            const auto& axis = axes[a];
            row.axis_values[a] = axis.values[rest % axis.values.size()];
            rest /= axis.values.size();
        }

        ScenarioConfig point = cfg;
        point.sweep_axes.clear();
        for (std::size_t a = 0; a < axes.size(); ++a) {
            const double v = row.axis_values[a];
            if (v == std::floor(v) && std::abs(v) < 1e15)
                point.params[axes[a].param] = static_cast<std::int64_t>(v);
            else
                point.params[axes[a].param] = v;
        }

        try {
            const ScenarioResult result = evaluate_scenario(point);
            row.metrics.assign(columns.size(), std::numeric_limits<double>::quiet_NaN());
            for (std::size_t c = 0; c < columns.size(); ++c)
                for (const auto& [name, value] : result.metrics)
                    if (name == columns[c]) {
                        row.metrics[c] = value;
                        break;
                    }
        } catch (const std::exception& err) {
            row.metrics.assign(columns.size(), std::numeric_limits<double>::quiet_NaN());
            std::string msg = err.what();
            std::replace(msg.begin(), msg.end(), ',', ';');
            std::replace(msg.begin(), msg.end(), '\n', ' ');
            row.error = msg;
        }
    };

    const int n_workers = std::max(1, workers);
    if (n_workers == 1 || total <= 1) {
        for (std::size_t k = 0; k < total; ++k) evaluate_point(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < total; k = next.fetch_add(1))
                    evaluate_point(k);
            });
        for (auto& t : pool) t.join();
    }

    std::string csv;
    for (const auto& axis : axes) csv += axis.param + ",";
    for (const auto& column : columns) csv += column + ",";
    csv += "error\n";
    for (const auto& row : rows) {
        for (double v : row.axis_values) csv += format_number(v) + ",";
        for (double v : row.metrics) csv += format_number(v) + ",";
        csv += row.error + "\n";
    }

    std::ostringstream report;
    report << report_header(cfg);
    report << "rows: " << total << "\n";
    for (const auto& axis : axes) report << "axis " << axis.param << ": " << axis.values.size()
                                         << " values\n";

    fs::create_directories(out_dir);
    write_file_atomic(out_dir, "report.txt", report.str());
    write_file_atomic(out_dir, "sweep.csv", csv);
}

} // namespace qdot
