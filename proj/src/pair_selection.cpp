#include "qlbm/pair_selection.hpp"

#include <cmath>
#include <string>

#include "qlbm/errors.hpp"

namespace qlbm {

PairSelectionPlan build_pair_selection_plan(const VelocitySet& set) {
    PairSelectionPlan plan;
    plan.branch_probability.push_back(set.w[0]);
    for (const auto& p : set.pairs)
        plan.branch_probability.push_back(set.w[static_cast<std::size_t>(p[0])] +
                                          set.w[static_cast<std::size_t>(p[1])]);

    double residual = 1.0;
    for (std::size_t m = 0; m + 1 < plan.branch_probability.size(); ++m) {
        const double p = plan.branch_probability[m];
        if (residual <= 0.0 || p > residual * (1.0 + 1e-12))
            throw InternalError("selection chain residual underflow: weights malformed");
        const double stop = p / residual;
        plan.stage_stop_probability.push_back(stop);
        plan.chain_angles.push_back(2.0 * std::acos(std::sqrt(std::min(stop, 1.0))));
        residual -= p;
    }
    return plan;
}

CollisionAngles collision_angles(const VelocitySet& set, int pair_index,
                                 const VelocityField& u) {
    if (pair_index < 0 || static_cast<std::size_t>(pair_index) >= set.pairs.size())
        throw InternalError("pair index out of range");
    const auto& c = set.c[static_cast<std::size_t>(set.pairs[static_cast<std::size_t>(pair_index)][0])];

    CollisionAngles angles;
    angles.pair_index = pair_index;
    angles.thetas.resize(u.grid().size());
    for (std::size_t k = 0; k < angles.thetas.size(); ++k) {
        const double ratio = u.dot(c, k) / set.cs2;
        if (std::abs(ratio) > 1.0 + 1e-12)
            throw DomainError("velocity constraint violated at site " + std::to_string(k) +
                              " for pair " + std::to_string(pair_index));
        const double half = 0.5 * (1.0 + std::min(1.0, std::max(-1.0, ratio)));
        angles.thetas[k] = 2.0 * std::acos(std::sqrt(half));
    }
    return angles;
}

} // namespace qlbm
