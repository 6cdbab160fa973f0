// Command-line front end for the dynamic-circuit QLBM solver: run single
// validation cases or sweeps, compare the hybrid scheme against the fully
// dynamic one, and verify the branch-enumeration oracle against the digital
// reference.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlbm/chi_square.hpp"
#include "qlbm/config_io.hpp"
#include "qlbm/digital_lbm.hpp"
#include "qlbm/engine.hpp"
#include "qlbm/errors.hpp"
#include "qlbm/experiments.hpp"

namespace {

using namespace qlbm;
using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInternal = 4;

struct CommonOpts {
    std::string config_path;
    std::string case_name;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    std::optional<unsigned> steps;
    std::optional<std::string> mode;
    std::optional<std::string> output_dir;
    unsigned threads = 0;
    bool verbose = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool need_source = true) {
    auto* cfg = cmd->add_option("-c,--config", opts.config_path, "JSON case config file");
    auto* cas = cmd->add_option("--case", opts.case_name, "name of a shipped case (see list-cases)");
    if (need_source) {
        cfg->excludes(cas);
        cas->excludes(cfg);
    }
    cmd->add_option("--seed", opts.seed, "override RNG seed");
    cmd->add_option("--shots", opts.shots, "override shot count");
    cmd->add_option("--steps", opts.steps, "override step count");
    cmd->add_option("--mode", opts.mode, "override mode (digital|sampled|ensemble|hybrid|oracle)");
    cmd->add_option("--output-dir", opts.output_dir, "override output directory");
    cmd->add_option("--threads", opts.threads, "worker thread cap (0 = all cores)")
        ->envname("QLBM_THREADS");
    cmd->add_flag("-v,--verbose", opts.verbose, "chatty progress output");
}

CaseConfig load_case(const CommonOpts& opts) {
    CaseConfig config;
    if (!opts.case_name.empty()) {
        auto found = find_shipped_case(opts.case_name);
        if (!found) throw ConfigError("no shipped case named '" + opts.case_name +
                                      "'; run list-cases to see the available names");
        config = *found;
    } else if (!opts.config_path.empty()) {
        config = parse_config(opts.config_path);
    } else {
        throw ConfigError("either --config or --case is required");
    }
    if (opts.seed) config.seed = *opts.seed;
    if (opts.shots) {
        if (*opts.shots == 0) throw ConfigError("--shots must be positive");
        config.shots = *opts.shots;
    }
    if (opts.steps) config.steps = *opts.steps;
    if (opts.mode) config.mode = run_mode_from_string(*opts.mode);
    if (opts.output_dir) config.output_dir = *opts.output_dir;
    config.threads = opts.threads;
    return config;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InternalError("cannot write " + path.string());
    out << content;
}

void print_summary(const CaseReport& report) {
    std::cout << "mode " << to_string(report.config.mode) << ", steps " << report.config.steps
              << ", shots " << report.shots << "\n"
              << "MAPE: " << report.mape_percent << " %\n"
              << "gates: ucry " << report.gates.ucry_applications << " (fraction/step "
              << report.accounting.ucry_fraction_per_step << ", expected "
              << report.accounting.expected_ucry_fraction << "), cnot-equivalents "
              << report.accounting.cnot_equivalents << "\n"
              << "measurements: selection " << report.gates.selection_measurements << ", pair "
              << report.gates.pair_measurements << "; streaming shifts "
              << report.gates.streaming_shifts << ", rest steps " << report.gates.rest_steps
              << "\n";
}

void write_report(const CaseReport& report, const std::filesystem::path& dir) {
    // render first so a failure never leaves partial files behind
    const std::string csv = density_to_csv(report);
    const std::string js = report_to_json(report);
    write_file(dir / "density.csv", csv);
    write_file(dir / "report.json", js);
}

int cmd_run(const CommonOpts& opts) {
    const CaseConfig config = load_case(opts);
    if (opts.verbose) std::cout << "config:\n" << config_to_json(config) << "\n";
    const CaseReport report = run_case(config);
    write_report(report, config.output_dir);
    print_summary(report);
    std::cout << "wrote " << config.output_dir << "/density.csv and report.json\n";
    return 0;
}

int cmd_sweep_shots(const CommonOpts& opts, const std::vector<std::uint64_t>& shots_list) {
    if (shots_list.empty()) throw ConfigError("--shots-list must not be empty");
    CaseConfig config = load_case(opts);
    std::vector<std::pair<double, double>> rows;
    for (std::uint64_t s : shots_list) {
        if (s == 0) throw ConfigError("shot counts must be positive");
        CaseConfig c = config;
        c.shots = s;
        const CaseReport report = run_case(c);
        write_report(report, std::filesystem::path(config.output_dir) /
                                 ("shots_" + std::to_string(s)));
        rows.emplace_back(static_cast<double>(s), report.mape_percent);
        std::cout << "shots " << s << ": MAPE " << report.mape_percent << " %\n";
    }
    write_file(std::filesystem::path(config.output_dir) / "sweep.csv",
               sweep_to_csv("shots", rows));
    std::cout << "wrote " << config.output_dir << "/sweep.csv\n";
    return 0;
}

int cmd_sweep_steps(const CommonOpts& opts, const std::vector<unsigned>& steps_list) {
    if (steps_list.empty()) throw ConfigError("--steps-list must not be empty");
    CaseConfig config = load_case(opts);
    std::vector<std::pair<double, double>> rows;
    for (unsigned t : steps_list) {
        CaseConfig c = config;
        c.steps = t;
        const CaseReport report = run_case(c);
        write_report(report, std::filesystem::path(config.output_dir) /
                                 ("steps_" + std::to_string(t)));
        rows.emplace_back(static_cast<double>(t), report.mape_percent);
        std::cout << "steps " << t << ": MAPE " << report.mape_percent << " %\n";
    }
    write_file(std::filesystem::path(config.output_dir) / "sweep.csv",
               sweep_to_csv("steps", rows));
    std::cout << "wrote " << config.output_dir << "/sweep.csv\n";
    return 0;
}

int cmd_compare_hybrid(const CommonOpts& opts) {
    CaseConfig config = load_case(opts);
    const VelocitySet set = make_velocity_set(config.set, config.cs2);
    const DensityField rho0 = config.make_initial_condition();
    const VelocityField u = config.make_velocity_field(set);
    const DensityField reference = run_digital(rho0, u, set, config.steps);

    EngineOptions eopts;
    eopts.threads = config.threads;
    const ShotEstimate dynamic =
        estimate_density(rho0, u, set, config.steps, config.shots, config.seed, eopts);
    const InstructionArray instructions =
        presample_instructions(set, config.steps, config.shots, config.seed);
    const ShotEstimate hybrid = run_hybrid(rho0, u, set, instructions, config.seed, eopts);

    const double mape_dynamic = mape(reference, dynamic.density());
    const double mape_hybrid = mape(reference, hybrid.density());
    const TwoSampleChiSquare chi = two_sample_chi_square(dynamic.counts, hybrid.counts);

    json j;
    j["mape_dynamic_percent"] = mape_dynamic;
    j["mape_hybrid_percent"] = mape_hybrid;
    j["chi_square"] = {{"statistic", chi.statistic},
                       {"dof", chi.dof},
                       {"p_value", chi.degenerate ? json() : json(chi.p_value)},
                       {"degenerate", chi.degenerate}};
    j["gate_stats_dynamic"] = {{"selection_measurements", dynamic.gates.selection_measurements},
                               {"pair_measurements", dynamic.gates.pair_measurements},
                               {"ucry_applications", dynamic.gates.ucry_applications}};
    j["gate_stats_hybrid"] = {{"selection_measurements", hybrid.gates.selection_measurements},
                              {"pair_measurements", hybrid.gates.pair_measurements},
                              {"ucry_applications", hybrid.gates.ucry_applications}};
    j["selection_measurements_saved"] =
        dynamic.gates.selection_measurements - hybrid.gates.selection_measurements;
    j["seed"] = config.seed;
    write_file(std::filesystem::path(config.output_dir) / "compare.json", j.dump(2));

    std::cout << "dynamic MAPE: " << mape_dynamic << " %\nhybrid  MAPE: " << mape_hybrid
              << " %\n";
    if (chi.degenerate)
        std::cout << "chi-square: degenerate (too few counts for the asymptotic test)\n";
    else
        std::cout << "chi-square: " << chi.statistic << " (dof " << chi.dof << ", p "
                  << chi.p_value << ")\n";
    std::cout << "selection measurements saved by hybrid: "
              << dynamic.gates.selection_measurements << "\n"
              << "wrote " << config.output_dir << "/compare.json\n";
    return 0;
}

int cmd_validate_oracle(unsigned threads, bool verbose) {
    (void)threads;
    struct Case {
        std::string name;
        DensityField rho0;
        VelocityField u;
        VelocitySet set;
        unsigned steps;
    };
    std::vector<Case> cases;

    { // 1D, random density, uniform advection
        const VelocitySet set = make_velocity_set(VelocitySetName::D1Q3);
        const LatticeGrid grid(8);
        CounterRng rng(stream_key(7, 0xF1E1D, 0));
        std::vector<double> vals(grid.size());
        for (auto& v : vals) v = 0.05 + rng.uniform();
        for (unsigned t = 1; t <= 4; ++t)
            cases.push_back({"D1Q3 N=8 random rho, u=0.1, T=" + std::to_string(t),
                             DensityField(grid, vals), VelocityField(grid, 0.1), set, t});
    }
    { // 1D, linear velocity profile
        const VelocitySet set = make_velocity_set(VelocitySetName::D1Q3);
        const LatticeGrid grid(8);
        cases.push_back({"D1Q3 N=8 uniform rho, linear u, T=3", uniform_ic(grid, 0.1),
                         linear_velocity(grid), set, 3});
    }
    { // 2D, double vortex
        const VelocitySet set = make_velocity_set(VelocitySetName::D2Q9);
        const LatticeGrid grid(4, 4);
        cases.push_back({"D2Q9 4x4 uniform rho, double vortex, T=2", uniform_ic(grid, 1.0),
                         double_vortex(grid, set), set, 2});
    }

    bool ok = true;
    for (const auto& c : cases) {
        const DensityField expected = run_digital(c.rho0, c.u, c.set, c.steps);
        const DensityField actual = enumerate_branches(c.rho0, c.u, c.set, c.steps);
        double max_abs = 0.0;
        for (std::size_t k = 0; k < expected.size(); ++k)
            max_abs = std::max(max_abs, std::abs(expected[k] - actual[k]));
        const bool pass = max_abs < 1e-10;
        ok = ok && pass;
        std::cout << (pass ? "[ok]   " : "[FAIL] ") << c.name << "  max|diff| = " << max_abs
                  << "\n";
        if (verbose && !pass)
            for (std::size_t k = 0; k < expected.size(); ++k)
                std::cout << "  site " << k << ": " << expected[k] << " vs " << actual[k] << "\n";
    }
    std::cout << (ok ? "oracle validation passed\n" : "oracle validation FAILED\n");
    return ok ? 0 : 1;
}

int cmd_list_cases(const std::string& dump_name) {
    if (!dump_name.empty()) {
        auto found = find_shipped_case(dump_name);
        if (!found) throw ConfigError("no shipped case named '" + dump_name + "'");
        std::cout << config_to_json(*found) << "\n";
        return 0;
    }
    for (const auto& [name, c] : shipped_cases()) {
        std::cout << name << ": " << to_string(c.set) << " grid";
        for (std::size_t n : c.grid) std::cout << " " << n;
        std::cout << ", steps " << c.steps << ", shots " << c.shots << ", mode "
                  << to_string(c.mode) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic-circuit quantum lattice-Boltzmann solver for advection-diffusion"};
    app.require_subcommand(1);

    CommonOpts run_opts, sweep_shots_opts, sweep_steps_opts, compare_opts;
    std::vector<std::uint64_t> shots_list;
    std::vector<unsigned> steps_list;
    unsigned oracle_threads = 0;
    bool oracle_verbose = false;
    std::string dump_name;

    auto* run = app.add_subcommand("run", "run one case and write density.csv + report.json");
    add_common(run, run_opts);

    auto* sweep_shots =
        app.add_subcommand("sweep-shots", "run a case over several shot counts");
    add_common(sweep_shots, sweep_shots_opts);
    sweep_shots->add_option("--shots-list", shots_list, "shot counts to sweep")
        ->required()
        ->delimiter(',');

    auto* sweep_steps = app.add_subcommand("sweep-steps", "run a case over several step counts");
    add_common(sweep_steps, sweep_steps_opts);
    sweep_steps->add_option("--steps-list", steps_list, "step counts to sweep")
        ->required()
        ->delimiter(',');

    auto* compare = app.add_subcommand(
        "compare-hybrid", "run hybrid and dynamic modes on one case and compare");
    add_common(compare, compare_opts);

    auto* validate =
        app.add_subcommand("validate-oracle", "check branch enumeration against the digital solver");
    validate->add_option("--threads", oracle_threads, "worker thread cap")->envname("QLBM_THREADS");
    validate->add_flag("-v,--verbose", oracle_verbose, "print per-site differences on failure");

    auto* list = app.add_subcommand("list-cases", "list the shipped validation cases");
    list->add_option("--dump", dump_name, "print the JSON config of one case");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_opts);
        if (sweep_shots->parsed()) return cmd_sweep_shots(sweep_shots_opts, shots_list);
        if (sweep_steps->parsed()) return cmd_sweep_steps(sweep_steps_opts, steps_list);
        if (compare->parsed()) return cmd_compare_hybrid(compare_opts);
        if (validate->parsed()) return cmd_validate_oracle(oracle_threads, oracle_verbose);
        if (list->parsed()) return cmd_list_cases(dump_name);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
