#pragma once

#include <cstdint>
#include <vector>

#include "qlbm/lattice.hpp"
#include "qlbm/pair_selection.hpp"
#include "qlbm/rng.hpp"
#include "qlbm/statevector.hpp"
#include "qlbm/velocity_set.hpp"

namespace qlbm {

// Operation counters accumulated over a run. CNOT equivalents are modeled
// analytically (one UCRY on n qubits decomposes into 2^(n-1) CNOTs), not
// transpiled.
struct GateStats {
    std::uint64_t selection_ry = 0;
    std::uint64_t selection_measurements = 0;
    std::uint64_t pair_measurements = 0;
    std::uint64_t ucry_applications = 0;
    std::uint64_t streaming_shifts = 0;
    std::uint64_t rest_steps = 0;

    std::uint64_t mid_circuit_measurements() const {
        return selection_measurements + pair_measurements;
    }
    GateStats& operator+=(const GateStats& o);
};

// Sampled density estimate: counts renormalized by the known initial mass,
// so the estimate conserves mass by construction.
struct ShotEstimate {
    LatticeGrid grid;
    std::vector<std::uint64_t> counts;
    std::uint64_t shots = 0;
    unsigned steps = 0;
    double initial_mass = 0.0;
    std::uint64_t seed = 0;
    GateStats gates;

    double total_mass() const { return initial_mass; }
    DensityField density() const;
};

struct EngineOptions {
    unsigned threads = 0;                     // 0 = hardware concurrency
    std::uint64_t max_live_nodes = 1'000'000; // per-worker branch-tree buffer cap
};

struct ShotResult {
    std::size_t site = 0;
    GateStats gates;
};

// Presampled branch choices for the hybrid scheme; cell(t, s) is the branch
// entry (0 = rest, m >= 1 = direction pair m-1) shot s executes at step t.
struct InstructionArray {
    unsigned steps = 0;
    std::uint64_t shots = 0;
    std::vector<std::uint8_t> cells; // row-major [t][s]

    std::uint8_t cell(unsigned t, std::uint64_t s) const { return cells[t * shots + s]; }
};

struct AccountingReport {
    double ucry_fraction_per_step = 0.0; // ucry / (steps * shots)
    double expected_ucry_fraction = 0.0; // 1 - w_rest
    std::uint64_t cnot_equivalents = 0;  // ucry * 2^grid_qubits
    std::uint64_t selection_ry = 0;
    std::uint64_t selection_measurements = 0;
    std::uint64_t pair_measurements = 0;
    std::uint64_t mid_circuit_measurements = 0;
    std::uint64_t streaming_shifts = 0;
    std::uint64_t rest_steps = 0;
    std::uint64_t ucry_applications = 0;
};

// One end-to-end circuit execution: encode, then per step walk the selection
// chain (RY/measure/reset on the ancilla), and on a pair branch apply the
// UCRY collision, measure the direction, and stream it; finally sample one
// grid site.
ShotResult run_shot(const DensityField& rho0, const VelocityField& u, const VelocitySet& set,
                    unsigned steps, CounterRng& rng);

// Aggregates independent shots; deterministic given seed for any thread count.
ShotEstimate estimate_density(const DensityField& rho0, const VelocityField& u,
                              const VelocitySet& set, unsigned steps, std::uint64_t shots,
                              std::uint64_t seed, const EngineOptions& opts = {});

// Distributionally identical to estimate_density but walks the branch tree
// once, allocating the shot population multinomially at every measurement
// node, so shots sharing a prefix share the simulation work.
ShotEstimate run_ensemble(const DensityField& rho0, const VelocityField& u,
                          const VelocitySet& set, unsigned steps, std::uint64_t shots,
                          std::uint64_t seed, const EngineOptions& opts = {});

// Exact expected density over all measurement outcome sequences; equals the
// digital LBM evolution. Guarded by a leaf-count bound.
DensityField enumerate_branches(const DensityField& rho0, const VelocityField& u,
                                const VelocitySet& set, unsigned steps,
                                std::uint64_t max_leaves = 1'000'000);

// i.i.d. branch draws with probability w_rest for rest and w_i + w_opp per
// pair; the classical preprocessing of the hybrid scheme.
InstructionArray presample_instructions(const VelocitySet& set, unsigned steps,
                                        std::uint64_t shots, std::uint64_t seed);

// Executes presampled instructions: no selection chain; the state-dependent
// within-pair measurement remains quantum.
ShotEstimate run_hybrid(const DensityField& rho0, const VelocityField& u,
                        const VelocitySet& set, const InstructionArray& instructions,
                        std::uint64_t seed, const EngineOptions& opts = {});

AccountingReport gate_accounting(const ShotEstimate& estimate, const VelocitySet& set,
                                 unsigned grid_qubits);

} // namespace qlbm
