#include "qlbm/experiments.hpp"

#include <chrono>
#include <cmath>
#include <utility>

#include "qlbm/digital_lbm.hpp"
#include "qlbm/errors.hpp"

namespace qlbm {

DensityField boxcar_ic(const LatticeGrid& grid, double background, double amplitude,
                       std::size_t width) {
    if (!(background > 0.0) || !(amplitude > 0.0))
        throw ConfigError("boxcar levels must be positive");
    for (unsigned a = 0; a < 3; ++a) {
        if (grid.extent(a) > 1 && grid.extent(a) < width + 2)
            throw ConfigError("grid extent " + std::to_string(grid.extent(a)) +
                              " too small for a width-" + std::to_string(width) + " plateau");
    }
    std::vector<double> vals(grid.size(), background);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto c = grid.coords(k);
        bool inside = true;
        for (unsigned a = 0; a < 3; ++a) {
            if (grid.extent(a) == 1) continue;
            const std::size_t lo = grid.extent(a) / 2 - width / 2;
            if (c[a] < lo || c[a] >= lo + width) inside = false;
        }
        if (inside) vals[k] = amplitude;
    }
    return DensityField(grid, std::move(vals));
}

DensityField uniform_ic(const LatticeGrid& grid, double value) {
    if (!(value > 0.0)) throw DomainError("uniform density must be positive");
    return DensityField(grid, value);
}

namespace {

double map_coord(std::size_t j, std::size_t extent, CoordMap coords) {
    const double denom = coords == CoordMap::Endpoint ? static_cast<double>(extent - 1)
                                                      : static_cast<double>(extent);
    return static_cast<double>(j) / denom;
}

} // namespace

VelocityField linear_velocity(const LatticeGrid& grid, double slope, double offset,
                              CoordMap coords) {
    if (grid.dim() != 1 || grid.nx() < 2)
        throw DomainError("linear velocity profile needs a 1D grid with at least two sites");
    VelocityField u(grid);
    for (std::size_t j = 0; j < grid.nx(); ++j)
        u.component(0, j) = slope * map_coord(j, grid.nx(), coords) + offset;
    return u;
}

VelocityField double_vortex(const LatticeGrid& grid, const VelocitySet& set,
                            const DoubleVortexParams& p) {
    if (grid.dim() != 2) throw DomainError("double vortex is two-dimensional");
    VelocityField u(grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const auto c = grid.coords(k);
        const double x = map_coord(c[0], grid.nx(), p.coords);
        const double y = map_coord(c[1], grid.ny(), p.coords);
        double ux, uy;
        if (x <= 0.5) {
            const double dx = x - p.center_left[0];
            const double dy = y - p.center_left[1];
            const double r = std::sqrt(dx * dx + dy * dy + p.epsilon);
            ux = -p.strength_left * dy / r;
            uy = p.strength_left * dx / r;
        } else {
            const double dx = x - p.center_right[0];
            const double dy = y - p.center_right[1];
            const double r = std::sqrt(dx * dx + dy * dy + p.epsilon);
            ux = p.strength_right * dy / r;
            uy = -p.strength_right * dx / r;
        }
        u.component(0, k) = ux;
        u.component(1, k) = uy;
    }
    check_velocity_constraint(u, set);
    return u;
}

double mape(const DensityField& reference, const DensityField& estimate) {
    if (!(reference.grid() == estimate.grid()))
        throw DomainError("mape requires matching grids");
    double sum = 0.0;
    for (std::size_t k = 0; k < reference.size(); ++k) {
        if (reference[k] == 0.0)
            throw DomainError("mape undefined: reference density is zero at site " +
                              std::to_string(k));
        sum += std::abs(reference[k] - estimate[k]) / std::abs(reference[k]);
    }
    return 100.0 * sum / static_cast<double>(reference.size());
}

std::string to_string(RunMode mode) {
    switch (mode) {
    case RunMode::Digital: return "digital";
    case RunMode::Sampled: return "sampled";
    case RunMode::Ensemble: return "ensemble";
    case RunMode::Hybrid: return "hybrid";
    case RunMode::Oracle: return "oracle";
    }
    return "?";
}

std::vector<std::string> run_mode_names() {
    return {"digital", "sampled", "ensemble", "hybrid", "oracle"};
}

RunMode run_mode_from_string(const std::string& s) {
    if (s == "digital") return RunMode::Digital;
    if (s == "sampled") return RunMode::Sampled;
    if (s == "ensemble") return RunMode::Ensemble;
    if (s == "hybrid") return RunMode::Hybrid;
    if (s == "oracle") return RunMode::Oracle;
    std::string known;
    for (const auto& n : run_mode_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown mode '" + s + "'; expected one of: " + known);
}

LatticeGrid CaseConfig::make_grid() const {
    if (grid.empty() || grid.size() > 3)
        throw ConfigError("grid must list 1 to 3 extents");
    const std::size_t nx = grid[0];
    const std::size_t ny = grid.size() > 1 ? grid[1] : 1;
    const std::size_t nz = grid.size() > 2 ? grid[2] : 1;
    return LatticeGrid(nx, ny, nz);
}

DensityField CaseConfig::make_initial_condition() const {
    const LatticeGrid g = make_grid();
    if (ic.type == "boxcar") return boxcar_ic(g, ic.background, ic.amplitude, ic.width);
    if (ic.type == "uniform") return uniform_ic(g, ic.value);
    throw ConfigError("unknown initial condition '" + ic.type + "'");
}

VelocityField CaseConfig::make_velocity_field(const VelocitySet& vset) const {
    const LatticeGrid g = make_grid();
    if (velocity.type == "uniform") return VelocityField(g, velocity.ux, velocity.uy);
    if (velocity.type == "linear")
        return linear_velocity(g, velocity.slope, velocity.offset, velocity.linear_coords);
    if (velocity.type == "double_vortex") return double_vortex(g, vset, velocity.vortex);
    throw ConfigError("unknown velocity field '" + velocity.type + "'");
}

CaseReport run_case(const CaseConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();

    const VelocitySet vset = make_velocity_set(config.set, config.cs2);
    const DensityField rho0 = config.make_initial_condition();
    const VelocityField u = config.make_velocity_field(vset);

    DensityField reference = run_digital(rho0, u, vset, config.steps);

    EngineOptions opts;
    opts.threads = config.threads;

    DensityField estimate = reference;
    GateStats gates;
    std::uint64_t shots_used = 0;
    switch (config.mode) {
    case RunMode::Digital:
        break;
    case RunMode::Sampled: {
        auto est = estimate_density(rho0, u, vset, config.steps, config.shots, config.seed, opts);
        estimate = est.density();
        gates = est.gates;
        shots_used = est.shots;
        break;
    }
    case RunMode::Ensemble: {
        auto est = run_ensemble(rho0, u, vset, config.steps, config.shots, config.seed, opts);
        estimate = est.density();
        gates = est.gates;
        shots_used = est.shots;
        break;
    }
    case RunMode::Hybrid: {
        auto instructions = presample_instructions(vset, config.steps, config.shots, config.seed);
        auto est = run_hybrid(rho0, u, vset, instructions, config.seed, opts);
        estimate = est.density();
        gates = est.gates;
        shots_used = est.shots;
        break;
    }
    case RunMode::Oracle:
        estimate = enumerate_branches(rho0, u, vset, config.steps);
        break;
    }

    CaseReport report{config,
                      std::move(reference),
                      std::move(estimate),
                      {},
                      0.0,
                      gates,
                      {},
                      shots_used,
                      0.0};
    report.rel_error.resize(report.rho_digital.size());
    for (std::size_t k = 0; k < report.rho_digital.size(); ++k)
        report.rel_error[k] = std::abs(report.rho_digital[k] - report.rho_estimate[k]) /
                              std::abs(report.rho_digital[k]);
    report.mape_percent = mape(report.rho_digital, report.rho_estimate);

    ShotEstimate stats_view;
    stats_view.shots = shots_used;
    stats_view.steps = config.steps;
    stats_view.gates = gates;
    report.accounting = gate_accounting(stats_view, vset, config.make_grid().qubit_count());

    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

namespace {

CaseConfig base_case(VelocitySetName set, std::vector<std::size_t> grid, unsigned steps,
                     std::uint64_t shots, RunMode mode) {
    CaseConfig c;
    c.set = set;
    c.grid = std::move(grid);
    c.steps = steps;
    c.shots = shots;
    c.mode = mode;
    return c;
}

} // namespace

std::vector<std::pair<std::string, CaseConfig>> shipped_cases() {
    std::vector<std::pair<std::string, CaseConfig>> cases;

    { // 1D boxcar, one step, uniform advection
        CaseConfig c = base_case(VelocitySetName::D1Q3, {32}, 1, 1'000'000, RunMode::Sampled);
        c.velocity.type = "uniform";
        c.velocity.ux = 0.1;
        cases.emplace_back("d1q3-boxcar-1step", c);
    }
    { // 2D boxcar, one step, uniform diagonal advection
        CaseConfig c = base_case(VelocitySetName::D2Q9, {16, 16}, 1, 1'000'000, RunMode::Sampled);
        c.velocity.type = "uniform";
        c.velocity.ux = 0.1;
        c.velocity.uy = 0.1;
        cases.emplace_back("d2q9-boxcar-1step", c);
    }
    { // 1D boxcar, 50 steps
        CaseConfig c = base_case(VelocitySetName::D1Q3, {32}, 50, 1'000'000, RunMode::Sampled);
        c.velocity.type = "uniform";
        c.velocity.ux = 0.1;
        cases.emplace_back("d1q3-boxcar-50steps", c);
    }
    { // 1D boxcar, 250 steps, high shot count
        CaseConfig c = base_case(VelocitySetName::D1Q3, {32}, 250, 10'000'000, RunMode::Ensemble);
        c.velocity.type = "uniform";
        c.velocity.ux = 0.1;
        cases.emplace_back("d1q3-boxcar-250steps", c);
    }
    { // 1D uniform density with linearly increasing advection velocity
        CaseConfig c = base_case(VelocitySetName::D1Q3, {32}, 250, 10'000'000, RunMode::Ensemble);
        c.ic.type = "uniform";
        c.ic.value = 0.1;
        c.velocity.type = "linear";
        cases.emplace_back("d1q3-linear-250steps", c);
    }
    for (unsigned t : {5u, 10u, 25u}) { // 2D double vortex on uniform density
        CaseConfig c = base_case(VelocitySetName::D2Q9, {32, 16}, t, 10'000'000, RunMode::Ensemble);
        c.ic.type = "uniform";
        c.ic.value = 1.0;
        c.velocity.type = "double_vortex";
        cases.emplace_back("d2q9-vortex-" + std::to_string(t) + "steps", c);
    }
    { // hybrid scheme on the linear-velocity case
        CaseConfig c = base_case(VelocitySetName::D1Q3, {8}, 10, 1'000'000, RunMode::Hybrid);
        c.ic.type = "uniform";
        c.ic.value = 0.1;
        c.velocity.type = "linear";
        cases.emplace_back("d1q3-hybrid-10steps", c);
    }
    return cases;
}

std::optional<CaseConfig> find_shipped_case(const std::string& name) {
    for (auto& [n, c] : shipped_cases())
        if (n == name) return c;
    return std::nullopt;
}

} // namespace qlbm
