// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "qdot/continuous_trap.hpp"

namespace qdot {

using Json = nlohmann::ordered_json;

enum class ScenarioKind {
    dynamical,
    triangle_ab,
    blockade,
    timing_sweep,
    continuous_geometric,
    displacement,
};

const char* kind_name(ScenarioKind kind);

/// Configuration problem. The category distinguishes I/O trouble, malformed
/// JSON, and the schema violations (missing key, unknown key, wrong type,
/// out-of-range value); the message always names the offending key.
class ConfigError : public std::runtime_error {
public:
    enum class Category { io, parse, missing_key, unknown_key, type_mismatch, bad_value };

    ConfigError(Category category, const std::string& msg)
        : std::runtime_error(msg), category_(category) {}

    Category category() const { return category_; }

private:
    Category category_;
};

/// One sweep axis: a numeric parameter replaced by {"sweep": [v0, v1, ...]}.
struct SweepAxis {
    std::string param;
    std::vector<double> values;
};

/// Validated scenario file. `params` keeps the raw (validated) parameter map,
/// including any sweep-axis syntax, so serialization round-trips exactly.
struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::dynamical;
    Units units = Units::natural;
    std::string output;
    Json params = Json::object();
    std::vector<SweepAxis> sweep_axes;  // in file order

    bool operator==(const ScenarioConfig& other) const;
};

ScenarioConfig parse_config(const std::string& path);

/// Parse from an in-memory JSON string (same validation as parse_config).
ScenarioConfig parse_config_text(const std::string& text);

/// Canonical JSON serialization; parse_config_text(serialize(cfg)) == cfg.
std::string serialize(const ScenarioConfig& cfg);

/// FNV-1a hash of the canonical serialization, as 16 hex digits.
std::string config_hash(const ScenarioConfig& cfg);

} // namespace qdot
