#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qlbm {

enum class VelocitySetName { D1Q3, D2Q9 };

std::string to_string(VelocitySetName name);
VelocitySetName velocity_set_from_string(const std::string& s);

// Discrete velocity set with exact rational weights. Direction 0 is the
// resting population; every moving direction i has an opposite partner
// with c_opp = -c_i and equal weight.
struct VelocitySet {
    VelocitySetName name = VelocitySetName::D1Q3;
    int dim = 1;
    int q = 3;
    std::vector<std::array<int, 3>> c;       // lattice vectors, one per direction
    std::vector<double> w;                   // weights (converted from rationals)
    std::vector<long> w_num;                 // exact weight numerators
    long w_den = 1;                          // common denominator
    double cs2 = 1.0 / 3.0;                  // lattice sound speed squared
    std::vector<std::array<int, 2>> pairs;   // (i, opposite) index pairs

    // Largest |c_i . u| admissible at a site: the equilibrium stays
    // nonnegative iff |c_i . u| <= cs2 for all i.
    bool pair_weights_match() const;
};

VelocitySet make_velocity_set(VelocitySetName name, double cs2 = 1.0 / 3.0);
VelocitySet make_velocity_set(const std::string& name, double cs2 = 1.0 / 3.0);

} // namespace qlbm
