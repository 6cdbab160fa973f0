#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlbm/engine.hpp"
#include "qlbm/lattice.hpp"
#include "qlbm/velocity_set.hpp"

namespace qlbm {

// --- initial conditions -----------------------------------------------------

// Background 0.1 with a centered plateau of amplitude 0.2 and width 6 per
// axis (sites N/2-3 .. N/2+2 along each active axis).
DensityField boxcar_ic(const LatticeGrid& grid, double background = 0.1,
                       double amplitude = 0.2, std::size_t width = 6);

DensityField uniform_ic(const LatticeGrid& grid, double value);

// --- velocity fields ---------------------------------------------------------

// Lattice-to-unit-interval coordinate maps for analytic velocity fields.
// Endpoint: x_j = j/(N-1), so the profile bounds are hit exactly.
// Cell: x_j = j/N.
enum class CoordMap { Endpoint, Cell };

// u(x_j) = slope * x_j + offset. One-dimensional grids only.
VelocityField linear_velocity(const LatticeGrid& grid, double slope = 0.1,
                              double offset = 0.1, CoordMap coords = CoordMap::Endpoint);

struct DoubleVortexParams {
    double strength_left = 0.2;
    double strength_right = 0.1;
    double center_left[2] = {0.25, 0.5};
    double center_right[2] = {0.75, 0.5};
    double epsilon = 1e-8;
    CoordMap coords = CoordMap::Cell;
};

// Two counter-rotating vortices split at x = 1/2 in normalized coordinates.
// Validates the lattice velocity constraint on construction.
VelocityField double_vortex(const LatticeGrid& grid, const VelocitySet& set,
                            const DoubleVortexParams& params = {});

// --- metrics ------------------------------------------------------------------

// 100/N * sum |ref - est| / |ref|; every reference entry must be nonzero.
double mape(const DensityField& reference, const DensityField& estimate);

// --- case running ---------------------------------------------------------------

enum class RunMode { Digital, Sampled, Ensemble, Hybrid, Oracle };

std::string to_string(RunMode mode);
RunMode run_mode_from_string(const std::string& s);
std::vector<std::string> run_mode_names();

struct InitialConditionSpec {
    std::string type = "boxcar"; // boxcar | uniform
    double background = 0.1;
    double amplitude = 0.2;
    std::size_t width = 6;
    double value = 1.0; // uniform
};

struct VelocityFieldSpec {
    std::string type = "uniform"; // uniform | linear | double_vortex
    double ux = 0.0;
    double uy = 0.0;
    double slope = 0.1;  // linear
    double offset = 0.1; // linear
    CoordMap linear_coords = CoordMap::Endpoint;
    DoubleVortexParams vortex;
};

struct CaseConfig {
    VelocitySetName set = VelocitySetName::D1Q3;
    std::vector<std::size_t> grid = {32};
    double cs2 = 1.0 / 3.0;
    InitialConditionSpec ic;
    VelocityFieldSpec velocity;
    unsigned steps = 1;
    std::uint64_t shots = 1'000'000;
    RunMode mode = RunMode::Ensemble;
    std::uint64_t seed = 0;
    std::string output_dir = "out";
    unsigned threads = 0;

    LatticeGrid make_grid() const;
    DensityField make_initial_condition() const;
    VelocityField make_velocity_field(const VelocitySet& set) const;
};

struct CaseReport {
    CaseConfig config;
    DensityField rho_digital;
    DensityField rho_estimate;
    std::vector<double> rel_error; // |ref - est| / ref per site
    double mape_percent = 0.0;
    GateStats gates;
    AccountingReport accounting;
    std::uint64_t shots = 0;
    double wall_time_s = 0.0;
};

CaseReport run_case(const CaseConfig& config);

// The validation cases shipped with the tool, by name.
std::vector<std::pair<std::string, CaseConfig>> shipped_cases();
std::optional<CaseConfig> find_shipped_case(const std::string& name);

} // namespace qlbm
