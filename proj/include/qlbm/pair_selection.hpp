#pragma once

#include <cstddef>
#include <vector>

#include "qlbm/lattice.hpp"
#include "qlbm/velocity_set.hpp"

namespace qlbm {

// Ancilla RY/measure/reset chain that picks which population to compute.
// Branch entry 0 is the resting population; entry m >= 1 is direction pair
// m-1 of the velocity set. Stage m of the chain stops (outcome 0) with
// conditional probability cos^2(theta[m]/2) = p_m / r_m, where p_m is the
// entry's weight mass and r_m the residual; the all-ones suffix selects the
// final pair. Unconditional branch probabilities are therefore
// {w_rest} u {w_i + w_opp} and sum to one.
struct PairSelectionPlan {
    std::vector<double> chain_angles;       // one per stage, size = pair count
    std::vector<double> branch_probability; // size = pair count + 1, entry 0 = rest
    std::vector<double> stage_stop_probability; // cos^2(theta/2) per stage

    std::size_t entries() const { return branch_probability.size(); }
    std::size_t pair_count() const { return chain_angles.size(); }

    // Chain stages executed (RY + measurement count) when entry is selected.
    std::size_t stages_for_entry(std::size_t entry) const {
        return entry < pair_count() ? entry + 1 : pair_count();
    }
};

PairSelectionPlan build_pair_selection_plan(const VelocitySet& set);

// Per-site UCRY angles for one direction pair: theta_j encodes the split
// between direction i and its opposite, cos^2(theta_j/2) = (1 + c_i.u_j/cs2)/2.
struct CollisionAngles {
    int pair_index = 0;            // index into set.pairs
    std::vector<double> thetas;    // one per grid site
};

CollisionAngles collision_angles(const VelocitySet& set, int pair_index,
                                 const VelocityField& u);

} // namespace qlbm
