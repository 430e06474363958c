// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: validate scenario configs, run single scenarios,
// and drive parameter sweeps. Exit codes: 0 ok, 2 config error, 3 numerical
// contract violation, 4 degenerate geometry or gate.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>

#include "qdot/config.hpp"
#include "qdot/errors.hpp"
#include "qdot/runner.hpp"
#include "qdot/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitDegenerate = 4;

int dispatch(const std::string& mode, const std::string& config_path, const std::string& out_dir,
             const std::string& units_override, int workers) {
    qdot::ScenarioConfig cfg = qdot::parse_config(config_path);

    if (!units_override.empty()) {
        if (units_override == "natural") {
            cfg.units = qdot::Units::natural;
        } else if (units_override == "si") {
            if (cfg.kind != qdot::ScenarioKind::continuous_geometric &&
                cfg.kind != qdot::ScenarioKind::displacement)
                throw qdot::ConfigError(qdot::ConfigError::Category::bad_value,
                                        "--units si applies only to continuous-trap scenarios");
            cfg.units = qdot::Units::si;
        } else {
            throw qdot::ConfigError(qdot::ConfigError::Category::bad_value,
                                    "--units must be 'natural' or 'si'");
        }
    }

    if (mode == "validate") {
        std::cout << "ok: " << qdot::kind_name(cfg.kind) << " config, hash "
                  << qdot::config_hash(cfg) << "\n";
        return kExitOk;
    }

    std::string out = !out_dir.empty() ? out_dir : cfg.output;
    if (out.empty())
        throw qdot::ConfigError(qdot::ConfigError::Category::bad_value,
                                "no output directory: set 'output' in the config or pass --out");

    if (mode == "run")
        qdot::run_scenario(cfg, out);
    else
        qdot::run_sweep(cfg, out, workers);
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("qdotsim ") + qdot::version +
                 " - charge-qubit phase-gate simulator for quantum-dot arrays"};
    app.set_version_flag("--version", std::string(qdot::version));
    app.footer("Exit codes: 0 ok, 2 config error, 3 numerical contract violation,\n"
               "4 degenerate geometry or gate (non-phase-like gate, point on a\n"
               "trajectory, non-adiabatic trap motion).");
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string units;
    int workers = 1;

    auto add_common = [&](CLI::App* sub, bool needs_out) {
        sub->add_option("--config", config_path, "scenario config file (JSON)")->required();
        if (needs_out) sub->add_option("--out", out_dir, "output directory (overrides config)");
        sub->add_option("--units", units, "unit system override: natural | si");
    };

    CLI::App* run = app.add_subcommand("run", "run a single scenario and write its artifacts");
    add_common(run, true);

    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter grid and write sweep.csv");
    add_common(sweep, true);
    sweep->add_option("--workers", workers, "concurrent evaluation threads")
        ->check(CLI::PositiveNumber);

    CLI::App* validate = app.add_subcommand("validate", "check a config file and exit");
    add_common(validate, false);

    CLI11_PARSE(app, argc, argv);

    const std::string mode = app.get_subcommands().front()->get_name();
    try {
        return dispatch(mode, config_path, out_dir, units, workers);
    } catch (const qdot::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return kExitConfig;
    } catch (const qdot::ArgumentError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return kExitConfig;
    } catch (const qdot::NumericalContractError& err) {
        std::cerr << "numerical error: " << err.what() << "\n";
        return kExitNumerical;
    } catch (const qdot::DegenerateGateError& err) {
        std::cerr << "degenerate gate: " << err.what() << "\n";
        return kExitDegenerate;
    } catch (const qdot::DegenerateGeometryError& err) {
        std::cerr << "degenerate geometry: " << err.what() << "\n";
        return kExitDegenerate;
    } catch (const qdot::AdiabaticityError& err) {
        std::cerr << "adiabaticity violation: " << err.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
