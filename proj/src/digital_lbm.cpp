#include "qlbm/digital_lbm.hpp"

#include <cmath>
#include <string>

#include "qlbm/errors.hpp"

namespace qlbm {

namespace {
constexpr double kConstraintSlack = 1e-12;
}

void check_velocity_constraint(const VelocityField& u, const VelocitySet& set) {
    const std::size_t n = u.grid().size();
    for (int i = 0; i < set.q; ++i) {
        const auto& c = set.c[static_cast<std::size_t>(i)];
        if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
            const double ratio = std::abs(u.dot(c, k)) / set.cs2;
            if (ratio > 1.0 + kConstraintSlack)
                throw DomainError("velocity constraint violated at site " + std::to_string(k) +
                                  ", direction " + std::to_string(i) + ": |c.u|/cs2 = " +
                                  std::to_string(ratio));
        }
    }
}

std::vector<DensityField> equilibrium(const DensityField& rho, const VelocityField& u,
                                      const VelocitySet& set) {
    if (!(rho.grid() == u.grid())) throw DomainError("density and velocity grids differ");
    check_velocity_constraint(u, set);

    const std::size_t n = rho.size();
    std::vector<DensityField> f;
    f.reserve(static_cast<std::size_t>(set.q));
    for (int i = 0; i < set.q; ++i) {
        const auto& c = set.c[static_cast<std::size_t>(i)];
        const double w = set.w[static_cast<std::size_t>(i)];
        std::vector<double> vals(n);
        for (std::size_t k = 0; k < n; ++k) {
            double v = w * rho[k] * (1.0 + u.dot(c, k) / set.cs2);
            if (v < 0.0) v = 0.0; // |c.u|/cs2 == 1 up to roundoff
            vals[k] = v;
        }
        f.emplace_back(rho.grid(), std::move(vals));
    }
    return f;
}

DensityField stream_periodic(const DensityField& field, const std::array<int, 3>& c) {
    const auto perm = field.grid().shift_permutation(c);
    std::vector<double> out(field.size());
    for (std::size_t k = 0; k < field.size(); ++k) out[perm[k]] = field[k];
    return DensityField(field.grid(), std::move(out));
}

DensityField digital_step(const DensityField& rho, const VelocityField& u,
                          const VelocitySet& set) {
    const auto f = equilibrium(rho, u, set);
    std::vector<double> out(rho.size(), 0.0);
    for (int i = 0; i < set.q; ++i) {
        const auto perm = rho.grid().shift_permutation(set.c[static_cast<std::size_t>(i)]);
        const auto& fi = f[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < rho.size(); ++k) out[perm[k]] += fi[k];
    }
    return DensityField(rho.grid(), std::move(out));
}

DensityField run_digital(const DensityField& rho0, const VelocityField& u,
                         const VelocitySet& set, unsigned steps) {
    DensityField rho = rho0;
    for (unsigned t = 0; t < steps; ++t) rho = digital_step(rho, u, set);
    return rho;
}

} // namespace qlbm
