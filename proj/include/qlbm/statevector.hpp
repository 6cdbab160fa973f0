#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qlbm/lattice.hpp"

namespace qlbm {

struct MeasurementRecord {
    unsigned qubit = 0;
    int outcome = 0;
    double probability = 0.0; // pre-measurement probability of the observed outcome
};

// Real-amplitude register over one lattice grid plus a small number of
// ancilla qubits. Ancillas occupy the least significant bits; the grid
// index occupies the bits above them, so basis index = (site << ancillas) | a.
// Every gate used by the algorithm is real orthogonal, which halves memory
// and keeps all amplitudes real.
class QuantumRegister {
public:
    explicit QuantumRegister(LatticeGrid grid, unsigned ancillas = 1);

    // |Psi> = sum_k sqrt(rho_k / mass) |k>|0...0>. Throws DomainError on an
    // all-zero density.
    static QuantumRegister encode(const DensityField& rho, unsigned ancillas = 1);

    const LatticeGrid& grid() const { return grid_; }
    unsigned ancillas() const { return ancillas_; }
    unsigned grid_qubits() const { return grid_.qubit_count(); }
    unsigned total_qubits() const { return grid_.qubit_count() + ancillas_; }
    std::size_t size() const { return amp_.size(); }
    const std::vector<double>& amplitudes() const { return amp_; }
    double amplitude(std::size_t basis) const { return amp_[basis]; }
    double norm_sq() const;

    void apply_ry(unsigned qubit, double theta);
    void apply_cnot(unsigned control, unsigned target);
    void apply_cry(unsigned control, unsigned target, double theta);

    // Block-diagonal rotation: RY(thetas[j]) on ancilla qubit 0 within each
    // grid block j. Requires exactly one ancilla and thetas.size() == sites.
    void apply_ucry(std::span<const double> thetas);

    double probability(unsigned qubit, int outcome) const;

    // Collapse onto the given outcome and renormalize; returns the
    // pre-collapse probability of that outcome.
    double project(unsigned qubit, int outcome);

    // Born-rule measurement driven by one uniform variate in [0,1).
    MeasurementRecord measure(unsigned qubit, double u01);

    // Measure-then-reset contract: maps a classically known |1> back to |0>
    // by relabeling. Throws InternalError if the qubit is in superposition.
    void reset(unsigned qubit);

    // Periodic increment/decrement of the grid coordinate along one axis;
    // ancilla bits are untouched.
    void apply_cyclic_shift(unsigned axis, int direction);

    // Full-register basis sample from one uniform variate; does not mutate.
    std::size_t sample(double u01) const;

private:
    void check_qubit(unsigned qubit) const;

    LatticeGrid grid_;
    unsigned ancillas_;
    std::vector<double> amp_;
};

} // namespace qlbm
