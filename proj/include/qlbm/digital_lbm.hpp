#pragma once

#include <vector>

#include "qlbm/lattice.hpp"
#include "qlbm/velocity_set.hpp"

namespace qlbm {

// Classical BGK lattice-Boltzmann solver for the linear advection-diffusion
// equation with relaxation ratio dt/tau = 1, i.e. the post-collision
// populations are exactly the equilibria. Serves as the ground-truth
// reference for all quantum runs.

// Checks |c_i . u| <= cs2 at every site for every direction; throws
// DomainError naming the first offending site/direction.
void check_velocity_constraint(const VelocityField& u, const VelocitySet& set);

// f_i(x) = w_i rho(x) (1 + c_i.u(x)/cs2) for each direction.
std::vector<DensityField> equilibrium(const DensityField& rho, const VelocityField& u,
                                      const VelocitySet& set);

// out(x) = field(x - c) with periodic wraparound.
DensityField stream_periodic(const DensityField& field, const std::array<int, 3>& c);

// One full update: rho'(x) = sum_i f_i(x - c_i).
DensityField digital_step(const DensityField& rho, const VelocityField& u,
                          const VelocitySet& set);

DensityField run_digital(const DensityField& rho0, const VelocityField& u,
                         const VelocitySet& set, unsigned steps);

} // namespace qlbm
