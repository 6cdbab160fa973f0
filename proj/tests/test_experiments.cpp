#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qlbm/digital_lbm.hpp"
#include "qlbm/errors.hpp"
#include "qlbm/experiments.hpp"

using namespace qlbm;

TEST_CASE("boxcar initial condition") {
    SUBCASE("N=32 profile") {
        const DensityField f = boxcar_ic(LatticeGrid(32));
        int plateau = 0, background = 0;
        for (std::size_t k = 0; k < 32; ++k) {
            if (f[k] == 0.2)
                ++plateau;
            else if (f[k] == 0.1)
                ++background;
        }
        CHECK(plateau == 6);
        CHECK(background == 26);
        CHECK(f.total_mass() == doctest::Approx(3.8).epsilon(1e-15));
        // symmetric about the domain center
        for (std::size_t k = 0; k < 32; ++k) CHECK(f[k] == f[31 - k]);
    }
    SUBCASE("2D plateau is a square") {
        const DensityField f = boxcar_ic(LatticeGrid(16, 16));
        int plateau = 0;
        for (std::size_t k = 0; k < f.size(); ++k) plateau += f[k] == 0.2;
        CHECK(plateau == 36);
        CHECK(f.total_mass() == doctest::Approx(0.1 * 220 + 0.2 * 36).epsilon(1e-14));
    }
    SUBCASE("too small a grid is rejected") {
        CHECK_THROWS_AS(boxcar_ic(LatticeGrid(4)), ConfigError);
    }
}

TEST_CASE("uniform initial condition") {
    const DensityField f = uniform_ic(LatticeGrid(8), 0.1);
    for (std::size_t k = 0; k < 8; ++k) CHECK(f[k] == 0.1);
    CHECK_THROWS_AS(uniform_ic(LatticeGrid(8), 0.0), DomainError);
    CHECK_THROWS_AS(uniform_ic(LatticeGrid(8), -1.0), DomainError);
}

TEST_CASE("linear velocity profile") {
    const LatticeGrid grid(32);
    const VelocityField u = linear_velocity(grid);
    CHECK(u.component(0, 0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(u.component(0, 31) == doctest::Approx(0.2).epsilon(1e-15));
    for (std::size_t j = 0; j < 32; ++j)
        CHECK(std::abs(u.component(0, j)) / (1.0 / 3.0) <= 0.6 + 1e-12);
    CHECK_THROWS_AS(linear_velocity(LatticeGrid(8, 8)), DomainError);

    // cell-based coordinate map stops one cell short of the endpoint
    const VelocityField uc = linear_velocity(grid, 0.1, 0.1, CoordMap::Cell);
    CHECK(uc.component(0, 31) == doctest::Approx(0.1 * 31.0 / 32.0 + 0.1).epsilon(1e-15));
}

TEST_CASE("double vortex field") {
    const VelocitySet set = make_velocity_set(VelocitySetName::D2Q9);
    const LatticeGrid grid(32, 16);
    const VelocityField u = double_vortex(grid, set);

    SUBCASE("vanishing u on the left vortex-center row") {
        // y_j = 8/16 = 0.5 equals the center height; u = -S (y-y1)/r = 0
        for (std::size_t x = 0; x <= 16; ++x)
            CHECK(u.component(0, grid.flatten(x, 8)) == doctest::Approx(0.0).epsilon(1e-15));
    }
    SUBCASE("magnitude bounded by the vortex strengths") {
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const double mag = std::hypot(u.component(0, k), u.component(1, k));
            CHECK(mag <= 0.2 + 1e-9);
        }
    }
    SUBCASE("lattice constraint satisfied with the default parameters") {
        double worst = 0.0;
        for (int i = 0; i < set.q; ++i)
            for (std::size_t k = 0; k < grid.size(); ++k)
                worst = std::max(worst,
                                 std::abs(u.dot(set.c[static_cast<std::size_t>(i)], k)) / set.cs2);
        CHECK(worst < 1.0);
        CHECK(worst == doctest::Approx(0.8485281).epsilon(1e-5));
    }
    SUBCASE("violating parameters are rejected at construction") {
        DoubleVortexParams strong;
        strong.strength_left = 0.9;
        CHECK_THROWS_AS(double_vortex(grid, set, strong), DomainError);
    }
}

TEST_CASE("mape") {
    const LatticeGrid grid(2);
    SUBCASE("identical fields") {
        const DensityField a(grid, {0.4, 0.6});
        CHECK(mape(a, a) == 0.0);
    }
    SUBCASE("hand value") {
        const DensityField ref(grid, {0.1, 0.2});
        const DensityField est(grid, {0.11, 0.18});
        CHECK(mape(ref, est) == doctest::Approx(10.0).epsilon(1e-12));
    }
    SUBCASE("zero reference rejected") {
        const DensityField ref(grid, {0.0, 0.2});
        const DensityField est(grid, {0.1, 0.2});
        CHECK_THROWS_AS(static_cast<void>(mape(ref, est)), DomainError);
    }
    SUBCASE("grid mismatch rejected") {
        const DensityField ref(grid, {0.1, 0.2});
        const DensityField est(LatticeGrid(4), 0.1);
        CHECK_THROWS_AS(static_cast<void>(mape(ref, est)), DomainError);
    }
}

TEST_CASE("run_case") {
    SUBCASE("oracle mode reproduces the digital result") {
        CaseConfig c;
        c.set = VelocitySetName::D1Q3;
        c.grid = {8};
        c.ic.type = "uniform";
        c.ic.value = 0.1;
        c.velocity.type = "linear";
        c.steps = 3;
        c.mode = RunMode::Oracle;
        const CaseReport rep = run_case(c);
        CHECK(rep.mape_percent < 1e-8);
    }
    SUBCASE("digital mode is exact by definition") {
        CaseConfig c;
        c.grid = {32};
        c.velocity.type = "uniform";
        c.velocity.ux = 0.1;
        c.steps = 5;
        c.mode = RunMode::Digital;
        const CaseReport rep = run_case(c);
        CHECK(rep.mape_percent == 0.0);
    }
    SUBCASE("sampled mode fills the report consistently") {
        CaseConfig c;
        c.grid = {32};
        c.velocity.type = "uniform";
        c.velocity.ux = 0.1;
        c.steps = 1;
        c.shots = 50000;
        c.mode = RunMode::Sampled;
        c.seed = 3;
        const CaseReport rep = run_case(c);
        CHECK(rep.mape_percent > 0.0);
        CHECK(rep.shots == 50000);
        CHECK(rep.gates.ucry_applications + rep.gates.rest_steps == 50000);
        // per-site relative error means exactly MAPE/100
        double mean = 0.0;
        for (double e : rep.rel_error) mean += e;
        mean /= static_cast<double>(rep.rel_error.size());
        CHECK(mean == doctest::Approx(rep.mape_percent / 100.0).epsilon(1e-12));
        CHECK(rep.accounting.cnot_equivalents == rep.gates.ucry_applications * 32);
    }
    SUBCASE("seed changes the estimate but not the reference") {
        CaseConfig c;
        c.grid = {16};
        c.velocity.type = "uniform";
        c.velocity.ux = 0.1;
        c.steps = 1;
        c.shots = 10000;
        c.mode = RunMode::Sampled;
        c.seed = 1;
        const CaseReport a = run_case(c);
        c.seed = 2;
        const CaseReport b = run_case(c);
        for (std::size_t k = 0; k < a.rho_digital.size(); ++k)
            CHECK(a.rho_digital[k] == b.rho_digital[k]);
        double diff = 0.0;
        for (std::size_t k = 0; k < a.rho_estimate.size(); ++k)
            diff += std::abs(a.rho_estimate[k] - b.rho_estimate[k]);
        CHECK(diff > 0.0);
    }
}

TEST_CASE("shipped cases are well formed") {
    const auto cases = shipped_cases();
    CHECK(cases.size() >= 8);
    for (const auto& [name, c] : cases) {
        CAPTURE(name);
        const VelocitySet set = make_velocity_set(c.set, c.cs2);
        const DensityField rho0 = c.make_initial_condition();
        const VelocityField u = c.make_velocity_field(set);
        check_velocity_constraint(u, set);
        CHECK(rho0.total_mass() > 0.0);
    }
    CHECK(find_shipped_case("d2q9-vortex-10steps").has_value());
    CHECK(!find_shipped_case("not-a-case").has_value());
}
