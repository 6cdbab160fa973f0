#include "qlbm/lattice.hpp"

#include <bit>
#include <string>

#include "qlbm/errors.hpp"

namespace qlbm {

LatticeGrid::LatticeGrid(std::size_t nx, std::size_t ny, std::size_t nz) : ext_{nx, ny, nz} {
    for (unsigned a = 0; a < 3; ++a) {
        if (ext_[a] == 0 || !std::has_single_bit(ext_[a]))
            throw DomainError("lattice extent " + std::to_string(ext_[a]) +
                              " is not a power of two");
        bits_[a] = static_cast<unsigned>(std::countr_zero(ext_[a]));
    }
}

int LatticeGrid::dim() const {
    if (ext_[2] > 1) return 3;
    if (ext_[1] > 1) return 2;
    return 1;
}

unsigned LatticeGrid::qubit_count() const { return bits_[0] + bits_[1] + bits_[2]; }

unsigned LatticeGrid::axis_bit_offset(unsigned axis) const {
    unsigned off = 0;
    for (unsigned a = 0; a < axis; ++a) off += bits_[a];
    return off;
}

unsigned LatticeGrid::axis_bits(unsigned axis) const { return bits_[axis]; }

std::size_t LatticeGrid::shifted(std::size_t k, unsigned axis, int shift) const {
    const std::size_t n = ext_[axis];
    const unsigned off = axis_bit_offset(axis);
    const std::size_t mask = (n - 1) << off;
    const std::size_t coord = (k & mask) >> off;
    const long long m = static_cast<long long>(n);
    const long long s = ((shift % m) + m) % m;
    const std::size_t moved = (coord + static_cast<std::size_t>(s)) & (n - 1);
    return (k & ~mask) | (moved << off);
}

std::vector<std::uint32_t> LatticeGrid::shift_permutation(const std::array<int, 3>& c) const {
    std::vector<std::uint32_t> perm(size());
    for (std::size_t k = 0; k < size(); ++k) {
        std::size_t dest = k;
        for (unsigned a = 0; a < 3; ++a)
            if (c[a] != 0) dest = shifted(dest, a, c[a]);
        perm[k] = static_cast<std::uint32_t>(dest);
    }
    return perm;
}

DensityField::DensityField(LatticeGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw DomainError("density size does not match grid");
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (!(values_[k] >= 0.0))
            throw DomainError("negative density at site " + std::to_string(k));
}

DensityField::DensityField(LatticeGrid grid, double fill)
    : DensityField(grid, std::vector<double>(grid.size(), fill)) {}

double DensityField::total_mass() const {
    double m = 0.0;
    for (double v : values_) m += v;
    return m;
}

VelocityField::VelocityField(LatticeGrid grid) : grid_(grid) {
    for (auto& c : comp_) c.assign(grid_.size(), 0.0);
}

VelocityField::VelocityField(LatticeGrid grid, double ux, double uy, double uz) : grid_(grid) {
    comp_[0].assign(grid_.size(), ux);
    comp_[1].assign(grid_.size(), uy);
    comp_[2].assign(grid_.size(), uz);
}

} // namespace qlbm
