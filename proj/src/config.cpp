// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdot/config.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

namespace qdot {

namespace {

using Category = ConfigError::Category;

struct ParamSpec {
    const char* key;
    enum class Type { number, integer, vec2, number_list, deformations, path, field } type;
    bool required;
    bool sweepable;  // may be replaced by {"sweep": [...]}
};

const std::vector<ParamSpec>& schema_for(ScenarioKind kind) {
    using T = ParamSpec::Type;
    static const std::vector<ParamSpec> dynamical = {
        {"delta_e", T::number, true, true},
        {"t", T::number, true, true},
    };
    static const std::vector<ParamSpec> triangle = {
        {"J", T::number, true, true},
        {"U", T::number, true, true},
        {"phi", T::number, true, true},
        {"windings", T::integer, false, true},
        {"timing_error", T::number, false, true},
        {"deformations", T::deformations, false, false},
    };
    static const std::vector<ParamSpec> blockade = {
        {"J", T::number, true, true},
        {"U", T::number, true, true},
    };
    static const std::vector<ParamSpec> timing = {
        {"J", T::number, true, false},
        {"U", T::number, true, false},
        {"phi", T::number, true, false},
        {"windings", T::integer, false, false},
        {"deformations", T::deformations, false, false},
        {"eps_grid", T::number_list, true, false},
    };
    static const std::vector<ParamSpec> geometric = {
        {"omega", T::number, true, true},
        {"mass", T::number, false, true},
        {"coulomb_constant", T::number, false, true},
        {"other_electron", T::vec2, true, false},
        {"exclusion_radius", T::number, false, false},
        {"path", T::path, true, false},
        {"field", T::field, true, false},
    };
    static const std::vector<ParamSpec> displacement = {
        {"omega", T::number, true, true},
        {"mass", T::number, false, true},
        {"coulomb_constant", T::number, false, true},
    };
    switch (kind) {
        case ScenarioKind::dynamical: return dynamical;
        case ScenarioKind::triangle_ab: return triangle;
        case ScenarioKind::blockade: return blockade;
        case ScenarioKind::timing_sweep: return timing;
        case ScenarioKind::continuous_geometric: return geometric;
        case ScenarioKind::displacement: return displacement;
    }
    return dynamical;
}

[[noreturn]] void fail(Category cat, const std::string& msg) { throw ConfigError(cat, msg); }

void check_number(const Json& value, const std::string& where) {
    if (!value.is_number())
        fail(Category::type_mismatch, "expected a number for '" + where + "'");
}

void check_vec2(const Json& value, const std::string& where) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number())
        fail(Category::type_mismatch, "expected [x, y] for '" + where + "'");
}

void check_no_unknown_keys(const Json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            fail(Category::unknown_key, "unknown key '" + item.key() + "' in " + where);
}

void check_deformations(const Json& value) {
    if (!value.is_array())
        fail(Category::type_mismatch, "expected a list for 'deformations'");
    for (const auto& d : value) {
        if (!d.is_object())
            fail(Category::type_mismatch, "each deformation must be an object");
        check_no_unknown_keys(d, {"after_segment", "link"}, "deformation");
        if (!d.contains("after_segment"))
            fail(Category::missing_key, "deformation missing 'after_segment'");
        if (!d["after_segment"].is_number_integer())
            fail(Category::type_mismatch, "expected an integer for 'after_segment'");
        if (!d.contains("link"))
            fail(Category::missing_key, "deformation missing 'link'");
        const auto& link = d["link"];
        if (!link.is_array() || link.size() != 2 || !link[0].is_number_integer() ||
            !link[1].is_number_integer())
            fail(Category::type_mismatch, "expected [a, b] dot indices for deformation 'link'");
    }
}

void check_path(const Json& value) {
    if (!value.is_object())
        fail(Category::type_mismatch, "expected an object for 'path'");
    if (!value.contains("kind"))
        fail(Category::missing_key, "path missing 'kind'");
    const std::string kind = value["kind"].is_string() ? value["kind"].get<std::string>() : "";
    if (kind == "circle") {
        check_no_unknown_keys(value, {"kind", "center", "radius", "samples"}, "path");
        for (const char* key : {"center", "radius", "samples"})
            if (!value.contains(key))
                fail(Category::missing_key, std::string("circle path missing '") + key + "'");
        check_vec2(value["center"], "path.center");
        check_number(value["radius"], "path.radius");
        if (!value["samples"].is_number_integer())
            fail(Category::type_mismatch, "expected an integer for 'path.samples'");
    } else if (kind == "polygon") {
        check_no_unknown_keys(value, {"kind", "points"}, "path");
        if (!value.contains("points"))
            fail(Category::missing_key, "polygon path missing 'points'");
        if (!value["points"].is_array() || value["points"].size() < 3)
            fail(Category::type_mismatch, "polygon 'points' must list at least 3 [x, y] pairs");
        for (const auto& p : value["points"]) check_vec2(p, "path.points[]");
    } else {
        fail(Category::bad_value, "path kind must be 'circle' or 'polygon'");
    }
}

void check_field(const Json& value) {
    if (!value.is_object())
        fail(Category::type_mismatch, "expected an object for 'field'");
    if (!value.contains("kind"))
        fail(Category::missing_key, "field missing 'kind'");
    const std::string kind = value["kind"].is_string() ? value["kind"].get<std::string>() : "";
    if (kind == "uniform") {
        check_no_unknown_keys(value, {"kind", "b"}, "field");
        if (!value.contains("b")) fail(Category::missing_key, "uniform field missing 'b'");
        check_number(value["b"], "field.b");
    } else if (kind == "solenoid") {
        check_no_unknown_keys(value, {"kind", "position", "flux"}, "field");
        for (const char* key : {"position", "flux"})
            if (!value.contains(key))
                fail(Category::missing_key, std::string("solenoid field missing '") + key + "'");
        check_vec2(value["position"], "field.position");
        check_number(value["flux"], "field.flux");
    } else {
        fail(Category::bad_value, "field kind must be 'uniform' or 'solenoid'");
    }
}

/// A sweepable numeric leaf: either a plain number or {"sweep": [numbers...]}.
bool is_sweep_node(const Json& value) {
    return value.is_object() && value.contains("sweep");
}

std::vector<double> read_sweep_values(const Json& node, const std::string& key) {
    check_no_unknown_keys(node, {"sweep"}, "'" + key + "'");
    const auto& list = node["sweep"];
    if (!list.is_array() || list.empty())
        fail(Category::type_mismatch, "expected a non-empty number list in '" + key + ".sweep'");
    std::vector<double> values;
    values.reserve(list.size());
    for (const auto& v : list) {
        if (!v.is_number())
            fail(Category::type_mismatch, "expected numbers in '" + key + ".sweep'");
        values.push_back(v.get<double>());
    }
    return values;
}

} // namespace

const char* kind_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::dynamical: return "dynamical";
        case ScenarioKind::triangle_ab: return "triangle_ab";
        case ScenarioKind::blockade: return "blockade";
        case ScenarioKind::timing_sweep: return "timing_sweep";
        case ScenarioKind::continuous_geometric: return "continuous_geometric";
        case ScenarioKind::displacement: return "displacement";
    }
    return "unknown";
}

bool ScenarioConfig::operator==(const ScenarioConfig& other) const {
    return kind == other.kind && units == other.units && output == other.output &&
           params.dump() == other.params.dump();
}

ScenarioConfig parse_config_text(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        fail(Category::parse, std::string("malformed JSON: ") + err.what());
    }
    if (!root.is_object())
        fail(Category::parse, "top level must be a JSON object");

    check_no_unknown_keys(root, {"kind", "units", "output", "params"}, "config");

    if (!root.contains("kind"))
        fail(Category::missing_key, "missing required key 'kind'");
    if (!root["kind"].is_string())
        fail(Category::type_mismatch, "expected a string for 'kind'");

    ScenarioConfig cfg;
    const std::string kind = root["kind"].get<std::string>();
    bool found = false;
    for (ScenarioKind k : {ScenarioKind::dynamical, ScenarioKind::triangle_ab,
                           ScenarioKind::blockade, ScenarioKind::timing_sweep,
                           ScenarioKind::continuous_geometric, ScenarioKind::displacement}) {
        if (kind == kind_name(k)) {
            cfg.kind = k;
            found = true;
            break;
        }
    }
    if (!found) fail(Category::bad_value, "unknown scenario kind '" + kind + "'");

    if (root.contains("units")) {
        if (!root["units"].is_string())
            fail(Category::type_mismatch, "expected a string for 'units'");
        const std::string units = root["units"].get<std::string>();
        if (units == "natural") {
            cfg.units = Units::natural;
        } else if (units == "si") {
            if (cfg.kind != ScenarioKind::continuous_geometric &&
                cfg.kind != ScenarioKind::displacement)
                fail(Category::bad_value, "'units': 'si' applies only to continuous-trap scenarios");
            cfg.units = Units::si;
        } else {
            fail(Category::bad_value, "'units' must be 'natural' or 'si'");
        }
    }

    if (root.contains("output")) {
        if (!root["output"].is_string())
            fail(Category::type_mismatch, "expected a string for 'output'");
        cfg.output = root["output"].get<std::string>();
    }

    if (!root.contains("params"))
        fail(Category::missing_key, "missing required key 'params'");
    if (!root["params"].is_object())
        fail(Category::type_mismatch, "expected an object for 'params'");
    cfg.params = root["params"];

    const auto& schema = schema_for(cfg.kind);
    std::set<std::string> allowed;
    for (const auto& spec : schema) allowed.insert(spec.key);
    check_no_unknown_keys(cfg.params, allowed, "params");

    for (const auto& spec : schema) {
        if (!cfg.params.contains(spec.key)) {
            if (spec.required)
                fail(Category::missing_key, std::string("missing required key '") + spec.key + "'");
            continue;
        }
        const Json& value = cfg.params[spec.key];

        if (is_sweep_node(value)) {
            if (!spec.sweepable)
                fail(Category::bad_value, std::string("'") + spec.key + "' cannot be swept");
            cfg.sweep_axes.push_back(SweepAxis{spec.key, read_sweep_values(value, spec.key)});
            continue;
        }

        switch (spec.type) {
            case ParamSpec::Type::number:
                check_number(value, spec.key);
                break;
            case ParamSpec::Type::integer:
                if (!value.is_number_integer())
                    fail(Category::type_mismatch,
                         std::string("expected an integer for '") + spec.key + "'");
                break;
            case ParamSpec::Type::vec2:
                check_vec2(value, spec.key);
                break;
            case ParamSpec::Type::number_list: {
                if (!value.is_array() || value.empty())
                    fail(Category::type_mismatch,
                         std::string("expected a non-empty number list for '") + spec.key + "'");
                for (const auto& v : value)
                    if (!v.is_number())
                        fail(Category::type_mismatch,
                             std::string("expected numbers in '") + spec.key + "'");
                break;
            }
            case ParamSpec::Type::deformations:
                check_deformations(value);
                break;
            case ParamSpec::Type::path:
                check_path(value);
                break;
            case ParamSpec::Type::field:
                check_field(value);
                break;
        }
    }
    return cfg;
}

ScenarioConfig parse_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(Category::io, "cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        fail(Category::io, "error reading config file '" + path + "'");
    return parse_config_text(buffer.str());
}

std::string serialize(const ScenarioConfig& cfg) {
    Json root = Json::object();
    root["kind"] = kind_name(cfg.kind);
    root["units"] = cfg.units == Units::si ? "si" : "natural";
    root["output"] = cfg.output;
    root["params"] = cfg.params;
    return root.dump(2) + "\n";
}

std::string config_hash(const ScenarioConfig& cfg) {
    const std::string text = serialize(cfg);
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int k = 15; k >= 0; --k) {
        hex[static_cast<std::size_t>(k)] = digits[hash & 0xF];
        hash >>= 4;
    }
    return hex;
}

} // namespace qdot
