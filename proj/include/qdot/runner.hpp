// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdot/config.hpp"

namespace qdot {

/// Scalar metrics and auxiliary CSV artifacts of one scenario evaluation.
struct ScenarioResult {
    std::vector<std::pair<std::string, double>> metrics;  // ordered, names fixed per kind
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, std::string>> csv_files;  // filename -> content
};

/// Evaluate a fully resolved config (no sweep axes). Pure; writes nothing.
ScenarioResult evaluate_scenario(const ScenarioConfig& cfg);

/// Metric column names used in sweep CSVs for a kind.
std::vector<std::string> metric_columns(ScenarioKind kind);

/// Run one scenario and write report.txt plus its CSV artifacts into out_dir.
/// All writes go through a temp file + atomic rename; a failing evaluation
/// leaves no partial artifacts.
void run_scenario(const ScenarioConfig& cfg, const std::string& out_dir);

/// Cartesian-product sweep over the config's sweep axes (first axis slowest).
/// One CSV row per grid point, ordered by grid index regardless of worker
/// scheduling; a failing point records an error row instead of aborting.
void run_sweep(const ScenarioConfig& cfg, const std::string& out_dir, int workers = 1);

/// Exact textual form of a double ("%.17g"), used for all numeric artifacts.
std::string format_number(double value);

} // namespace qdot
