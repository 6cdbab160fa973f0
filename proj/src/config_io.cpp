#include "qlbm/config_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qlbm/errors.hpp"

namespace qlbm {

using json = nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& expected) {
    throw ConfigError("config field '" + field + "': expected " + expected);
}

template <class T>
T require(const json& j, const std::string& field, const char* expected) {
    if (!j.contains(field)) throw ConfigError("config is missing field '" + field + "'");
    try {
        return j.at(field).get<T>();
    } catch (const json::exception&) {
        bad_field(field, expected);
    }
}

template <class T>
T optional_field(const json& j, const std::string& field, T fallback, const char* expected) {
    if (!j.contains(field)) return fallback;
    try {
        return j.at(field).get<T>();
    } catch (const json::exception&) {
        bad_field(field, expected);
    }
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CoordMap coord_map_from_string(const std::string& s) {
    if (s == "endpoint") return CoordMap::Endpoint;
    if (s == "cell") return CoordMap::Cell;
    throw ConfigError("unknown coordinate map '" + s + "'; expected endpoint or cell");
}

std::string to_string(CoordMap m) { return m == CoordMap::Endpoint ? "endpoint" : "cell"; }

} // namespace

CaseConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    CaseConfig c;
    c.set = velocity_set_from_string(require<std::string>(j, "velocity_set", "string"));
    c.grid = require<std::vector<std::size_t>>(j, "grid", "array of integers");
    if (c.grid.empty() || c.grid.size() > 3) bad_field("grid", "1 to 3 extents");
    for (std::size_t n : c.grid)
        if (n == 0 || (n & (n - 1)) != 0)
            throw ConfigError("grid extent " + std::to_string(n) +
                              " rejected: every extent must be a power of two");
    c.cs2 = optional_field<double>(j, "cs2", 1.0 / 3.0, "number");
    if (!(c.cs2 > 0.0)) bad_field("cs2", "positive number");

    if (j.contains("initial_condition")) {
        const json& ic = j.at("initial_condition");
        if (!ic.is_object()) bad_field("initial_condition", "object");
        c.ic.type = optional_field<std::string>(ic, "type", "boxcar", "string");
        if (c.ic.type != "boxcar" && c.ic.type != "uniform")
            throw ConfigError("unknown initial condition '" + c.ic.type +
                              "'; expected one of: boxcar, uniform");
        c.ic.background = optional_field<double>(ic, "background", 0.1, "number");
        c.ic.amplitude = optional_field<double>(ic, "amplitude", 0.2, "number");
        c.ic.width = optional_field<std::size_t>(ic, "width", 6, "integer");
        c.ic.value = optional_field<double>(ic, "value", 1.0, "number");
        if (c.ic.type == "uniform" && !(c.ic.value > 0.0)) bad_field("initial_condition.value", "positive number");
    }

    if (j.contains("velocity_field")) {
        const json& vf = j.at("velocity_field");
        if (!vf.is_object()) bad_field("velocity_field", "object");
        c.velocity.type = optional_field<std::string>(vf, "type", "uniform", "string");
        if (c.velocity.type != "uniform" && c.velocity.type != "linear" &&
            c.velocity.type != "double_vortex")
            throw ConfigError("unknown velocity field '" + c.velocity.type +
                              "'; expected one of: uniform, linear, double_vortex");
        c.velocity.ux = optional_field<double>(vf, "ux", 0.0, "number");
        c.velocity.uy = optional_field<double>(vf, "uy", 0.0, "number");
        c.velocity.slope = optional_field<double>(vf, "slope", 0.1, "number");
        c.velocity.offset = optional_field<double>(vf, "offset", 0.1, "number");
        if (vf.contains("coords")) {
            const CoordMap m = coord_map_from_string(
                optional_field<std::string>(vf, "coords", "endpoint", "string"));
            c.velocity.linear_coords = m;
            c.velocity.vortex.coords = m;
        }
        c.velocity.vortex.strength_left =
            optional_field<double>(vf, "strength_left", 0.2, "number");
        c.velocity.vortex.strength_right =
            optional_field<double>(vf, "strength_right", 0.1, "number");
        c.velocity.vortex.epsilon = optional_field<double>(vf, "epsilon", 1e-8, "number");
        if (vf.contains("center_left")) {
            auto v = require<std::vector<double>>(vf, "center_left", "array of 2 numbers");
            if (v.size() != 2) bad_field("velocity_field.center_left", "array of 2 numbers");
            c.velocity.vortex.center_left[0] = v[0];
            c.velocity.vortex.center_left[1] = v[1];
        }
        if (vf.contains("center_right")) {
            auto v = require<std::vector<double>>(vf, "center_right", "array of 2 numbers");
            if (v.size() != 2) bad_field("velocity_field.center_right", "array of 2 numbers");
            c.velocity.vortex.center_right[0] = v[0];
            c.velocity.vortex.center_right[1] = v[1];
        }
    }

    c.steps = optional_field<unsigned>(j, "steps", 1, "non-negative integer");
    c.shots = optional_field<std::uint64_t>(j, "shots", 1'000'000, "positive integer");
    if (c.shots == 0) bad_field("shots", "positive integer");
    c.mode = run_mode_from_string(optional_field<std::string>(j, "mode", "ensemble", "string"));
    c.seed = optional_field<std::uint64_t>(j, "seed", 0, "integer");
    c.output_dir = optional_field<std::string>(j, "output_dir", "out", "string");
    c.threads = optional_field<unsigned>(j, "threads", 0, "integer");
    return c;
}

CaseConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_json(ss.str());
}

namespace {

json config_json(const CaseConfig& c) {
    json j;
    j["velocity_set"] = to_string(c.set);
    j["grid"] = c.grid;
    j["cs2"] = c.cs2;
    json ic;
    ic["type"] = c.ic.type;
    if (c.ic.type == "boxcar") {
        ic["background"] = c.ic.background;
        ic["amplitude"] = c.ic.amplitude;
        ic["width"] = c.ic.width;
    } else {
        ic["value"] = c.ic.value;
    }
    j["initial_condition"] = ic;
    json vf;
    vf["type"] = c.velocity.type;
    if (c.velocity.type == "uniform") {
        vf["ux"] = c.velocity.ux;
        vf["uy"] = c.velocity.uy;
    } else if (c.velocity.type == "linear") {
        vf["slope"] = c.velocity.slope;
        vf["offset"] = c.velocity.offset;
        vf["coords"] = to_string(c.velocity.linear_coords);
    } else {
        vf["strength_left"] = c.velocity.vortex.strength_left;
        vf["strength_right"] = c.velocity.vortex.strength_right;
        vf["center_left"] = {c.velocity.vortex.center_left[0], c.velocity.vortex.center_left[1]};
        vf["center_right"] = {c.velocity.vortex.center_right[0],
                              c.velocity.vortex.center_right[1]};
        vf["epsilon"] = c.velocity.vortex.epsilon;
        vf["coords"] = to_string(c.velocity.vortex.coords);
    }
    j["velocity_field"] = vf;
    j["steps"] = c.steps;
    j["shots"] = c.shots;
    j["mode"] = to_string(c.mode);
    j["seed"] = c.seed;
    j["output_dir"] = c.output_dir;
    return j;
}

} // namespace

std::string config_to_json(const CaseConfig& config, int indent) {
    return config_json(config).dump(indent);
}

std::string report_to_json(const CaseReport& report, int indent) {
    json j;
    j["mape_percent"] = report.mape_percent;
    j["seed"] = report.config.seed;
    j["shots"] = report.shots;
    j["steps"] = report.config.steps;
    j["mode"] = to_string(report.config.mode);
    json g;
    g["selection_ry"] = report.gates.selection_ry;
    g["selection_measurements"] = report.gates.selection_measurements;
    g["pair_measurements"] = report.gates.pair_measurements;
    g["mid_circuit_measurements"] = report.gates.mid_circuit_measurements();
    g["ucry_applications"] = report.gates.ucry_applications;
    g["streaming_shifts"] = report.gates.streaming_shifts;
    g["rest_steps"] = report.gates.rest_steps;
    g["cnot_equivalents"] = report.accounting.cnot_equivalents;
    g["ucry_fraction_per_step"] = report.accounting.ucry_fraction_per_step;
    g["expected_ucry_fraction"] = report.accounting.expected_ucry_fraction;
    j["gate_stats"] = g;
    j["config"] = config_json(report.config);
    j["wall_time_s"] = report.wall_time_s;
    return j.dump(indent);
}

std::string density_to_csv(const CaseReport& report) {
    const LatticeGrid& grid = report.rho_digital.grid();
    const bool two_d = grid.dim() >= 2;
    std::string out = two_d ? "index,x,y,rho_digital,rho_estimate,rel_error\n"
                            : "index,x,rho_digital,rho_estimate,rel_error\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto c = grid.coords(k);
        out += std::to_string(k) + ',' + std::to_string(c[0]);
        if (two_d) out += ',' + std::to_string(c[1]);
        out += ',' + fmt17(report.rho_digital[k]) + ',' + fmt17(report.rho_estimate[k]) + ',' +
               fmt17(report.rel_error[k]) + '\n';
    }
    return out;
}

std::string sweep_to_csv(const std::string& column,
                         const std::vector<std::pair<double, double>>& rows) {
    auto sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    std::string out = column + ",mape_percent\n";
    for (const auto& [x, mape] : sorted) out += fmt17(x) + ',' + fmt17(mape) + '\n';
    return out;
}

} // namespace qlbm
