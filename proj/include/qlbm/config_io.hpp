#pragma once

#include <string>

#include "qlbm/experiments.hpp"

namespace qlbm {

// JSON schema:
// {velocity_set, grid:[...], cs2?, initial_condition:{type,...},
//  velocity_field:{type,...}, steps, shots, mode, seed, output_dir}
CaseConfig parse_config_json(const std::string& text);
CaseConfig parse_config(const std::string& path);
std::string config_to_json(const CaseConfig& config, int indent = 2);

// report.json body: mape_percent, gate_stats, accounting, config echo, seed,
// wall_time_s (the wall time lives in its own key and is excluded from the
// determinism contract).
std::string report_to_json(const CaseReport& report, int indent = 2);

// density.csv: index, x, [y], rho_digital, rho_estimate, rel_error
std::string density_to_csv(const CaseReport& report);

// sweep.csv rows sorted ascending by the swept quantity.
std::string sweep_to_csv(const std::string& column,
                         const std::vector<std::pair<double, double>>& rows);

} // namespace qlbm
