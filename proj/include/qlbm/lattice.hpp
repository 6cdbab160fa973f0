#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qlbm {

// Periodic lattice with power-of-two extents, flattened row-major with x
// fastest: k = x + Nx*(y + Ny*z). The power-of-two restriction keeps the
// site index an exact bit field, which the quantum register relies on.
class LatticeGrid {
public:
    LatticeGrid() : LatticeGrid(1, 1, 1) {}
    explicit LatticeGrid(std::size_t nx, std::size_t ny = 1, std::size_t nz = 1);

    std::size_t nx() const { return ext_[0]; }
    std::size_t ny() const { return ext_[1]; }
    std::size_t nz() const { return ext_[2]; }
    std::size_t extent(unsigned axis) const { return ext_[axis]; }
    std::size_t size() const { return ext_[0] * ext_[1] * ext_[2]; }
    int dim() const;
    unsigned qubit_count() const;                    // log2(size)
    unsigned axis_bit_offset(unsigned axis) const;   // first bit of that coordinate
    unsigned axis_bits(unsigned axis) const;         // log2(extent)

    std::size_t flatten(std::size_t x, std::size_t y = 0, std::size_t z = 0) const {
        return x + ext_[0] * (y + ext_[1] * z);
    }
    std::array<std::size_t, 3> coords(std::size_t k) const {
        return {k & (ext_[0] - 1), (k >> bits_[0]) & (ext_[1] - 1), (k >> (bits_[0] + bits_[1])) & (ext_[2] - 1)};
    }
    // Site reached from k after moving `shift` cells along `axis` (periodic).
    std::size_t shifted(std::size_t k, unsigned axis, int shift) const;
    // Destination table for a full lattice vector: out[perm[k]] = in[k].
    std::vector<std::uint32_t> shift_permutation(const std::array<int, 3>& c) const;

    bool operator==(const LatticeGrid&) const = default;

private:
    std::array<std::size_t, 3> ext_;
    std::array<unsigned, 3> bits_;
};

// Nonnegative scalar density per site.
class DensityField {
public:
    DensityField(LatticeGrid grid, std::vector<double> values);
    DensityField(LatticeGrid grid, double fill);

    const LatticeGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    double& operator[](std::size_t k) { return values_[k]; }
    const std::vector<double>& values() const { return values_; }
    double total_mass() const;

private:
    LatticeGrid grid_;
    std::vector<double> values_;
};

// Macroscopic velocity per site, stored per component.
class VelocityField {
public:
    explicit VelocityField(LatticeGrid grid);
    VelocityField(LatticeGrid grid, double ux, double uy = 0.0, double uz = 0.0);

    const LatticeGrid& grid() const { return grid_; }
    double component(unsigned axis, std::size_t k) const { return comp_[axis][k]; }
    double& component(unsigned axis, std::size_t k) { return comp_[axis][k]; }
    const std::vector<double>& component(unsigned axis) const { return comp_[axis]; }

    // c . u at site k for an integer lattice vector.
    double dot(const std::array<int, 3>& c, std::size_t k) const {
        double d = 0.0;
        for (unsigned a = 0; a < 3; ++a)
            if (c[a] != 0) d += c[a] * comp_[a][k];
        return d;
    }

private:
    LatticeGrid grid_;
    std::array<std::vector<double>, 3> comp_;
};

} // namespace qlbm
