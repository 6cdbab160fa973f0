#include "qlbm/statevector.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qlbm/errors.hpp"

namespace qlbm {

namespace {
constexpr double kClassicalTol = 1e-9; // superposition threshold for reset
constexpr double kDegenerateNorm = 1e-9;
} // namespace

QuantumRegister::QuantumRegister(LatticeGrid grid, unsigned ancillas)
    : grid_(grid), ancillas_(ancillas), amp_(grid.size() << ancillas, 0.0) {
    amp_[0] = 1.0;
}

QuantumRegister QuantumRegister::encode(const DensityField& rho, unsigned ancillas) {
    const double mass = rho.total_mass();
    if (!(mass > 0.0)) throw DomainError("cannot encode an all-zero density");
    QuantumRegister reg(rho.grid(), ancillas);
    reg.amp_[0] = 0.0;
    const double inv = 1.0 / mass;
    for (std::size_t k = 0; k < rho.size(); ++k)
        reg.amp_[k << ancillas] = std::sqrt(rho[k] * inv);
    return reg;
}

double QuantumRegister::norm_sq() const {
    double s = 0.0;
    for (double a : amp_) s += a * a;
    return s;
}

void QuantumRegister::check_qubit(unsigned qubit) const {
    if (qubit >= total_qubits())
        throw InternalError("qubit index " + std::to_string(qubit) + " out of range");
}

void QuantumRegister::apply_ry(unsigned qubit, double theta) {
    check_qubit(qubit);
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t lo_mask = bit - 1;
    const std::size_t hi_mask = ~lo_mask;
    const std::size_t half = amp_.size() >> 1;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
        const std::size_t i1 = i0 | bit;
        const double a0 = amp_[i0];
        const double a1 = amp_[i1];
        amp_[i0] = c * a0 - s * a1;
        amp_[i1] = s * a0 + c * a1;
    }
}

void QuantumRegister::apply_cnot(unsigned control, unsigned target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw InternalError("cnot control equals target");
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amp_.size(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(amp_[i], amp_[i | tbit]);
}

void QuantumRegister::apply_cry(unsigned control, unsigned target, double theta) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw InternalError("cry control equals target");
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            const std::size_t j = i | tbit;
            const double a0 = amp_[i];
            const double a1 = amp_[j];
            amp_[i] = c * a0 - s * a1;
            amp_[j] = s * a0 + c * a1;
        }
    }
}

void QuantumRegister::apply_ucry(std::span<const double> thetas) {
    if (ancillas_ != 1) throw InternalError("ucry requires a single ancilla register");
    if (thetas.size() != grid_.size())
        throw InternalError("ucry needs one angle per grid site: got " +
                            std::to_string(thetas.size()) + ", want " +
                            std::to_string(grid_.size()));
    for (std::size_t j = 0; j < thetas.size(); ++j) {
        const double c = std::cos(0.5 * thetas[j]);
        const double s = std::sin(0.5 * thetas[j]);
        const double a0 = amp_[2 * j];
        const double a1 = amp_[2 * j + 1];
        amp_[2 * j] = c * a0 - s * a1;
        amp_[2 * j + 1] = s * a0 + c * a1;
    }
}

double QuantumRegister::probability(unsigned qubit, int outcome) const {
    check_qubit(qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i)
        if (((i & bit) != 0) == (outcome != 0)) p += amp_[i] * amp_[i];
    return p;
}

double QuantumRegister::project(unsigned qubit, int outcome) {
    const double p = probability(qubit, outcome);
    if (!(p > 0.0)) throw InternalError("projection onto zero-probability outcome");
    const std::size_t bit = std::size_t{1} << qubit;
    const double inv = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (((i & bit) != 0) == (outcome != 0))
            amp_[i] *= inv;
        else
            amp_[i] = 0.0;
    }
    return p;
}

MeasurementRecord QuantumRegister::measure(unsigned qubit, double u01) {
    const double p0 = probability(qubit, 0);
    const double p1 = probability(qubit, 1);
    const double total = p0 + p1;
    if (total < kDegenerateNorm)
        throw InternalError("register norm degenerated before measurement");
    const int outcome = (u01 * total < p0) ? 0 : 1;
    const double p = project(qubit, outcome);
    return {qubit, outcome, p / total};
}

void QuantumRegister::reset(unsigned qubit) {
    check_qubit(qubit);
    const double p1 = probability(qubit, 1);
    const double total = p1 + probability(qubit, 0);
    if (total < kDegenerateNorm)
        throw InternalError("register norm degenerated before reset");
    const std::size_t bit = std::size_t{1} << qubit;
    if (p1 <= kClassicalTol * total) return;
    if (p1 < (1.0 - kClassicalTol) * total)
        throw InternalError("reset on a qubit in superposition; measure it first");
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) {
            amp_[i & ~bit] = amp_[i];
            amp_[i] = 0.0;
        }
    }
}

void QuantumRegister::apply_cyclic_shift(unsigned axis, int direction) {
    if (axis >= 3 || grid_.extent(axis) <= 1)
        throw InternalError("cyclic shift on missing axis " + std::to_string(axis));
    static thread_local std::vector<double> scratch;
    scratch.assign(amp_.size(), 0.0);
    const std::size_t amask = (std::size_t{1} << ancillas_) - 1;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        const std::size_t site = i >> ancillas_;
        const std::size_t dest = grid_.shifted(site, axis, direction);
        scratch[(dest << ancillas_) | (i & amask)] = amp_[i];
    }
    amp_.swap(scratch);
}

std::size_t QuantumRegister::sample(double u01) const {
    double acc = 0.0;
    const double target = u01 * norm_sq();
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        acc += amp_[i] * amp_[i];
        if (target < acc) return i;
    }
    return amp_.size() - 1;
}

} // namespace qlbm
