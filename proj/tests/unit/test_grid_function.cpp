#include "doctest.h"

#include "subaction/grid_function.hpp"
#include "subaction/perturb.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace subaction;

TEST_CASE("construction rejects short or non-finite sample vectors") {
    CHECK_THROWS_AS(GridFunction({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction({0.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction({0.0, INFINITY}), std::invalid_argument);
    CHECK(GridFunction({0.0, 1.0}).size() == 2);
}

TEST_CASE("eval") {
    const GridFunction f({0.0, 1.0, 0.0, -1.0});

    SUBCASE("constant function is constant everywhere") {
        const auto c = GridFunction::constant(7, 3.0);
        CHECK(eval(c, 0.123) == 3.0);
        CHECK(eval(c, -4.9) == 3.0);
    }
    SUBCASE("grid points return samples exactly") {
        CHECK(eval(f, 0.25) == 1.0);
        CHECK(eval(f, 0.75) == -1.0);
        CHECK(eval(f, 0.0) == 0.0);
    }
    SUBCASE("linear interpolation between neighbours") {
        CHECK(eval(f, 0.125) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(eval(f, 0.875) == doctest::Approx(-0.5).epsilon(1e-15));
    }
    SUBCASE("periodic") {
        for (double x : {0.1, 0.37, 0.999, 0.5})
            CHECK(eval(f, x) == doctest::Approx(eval(f, x + 1.0)).epsilon(1e-12));
        CHECK(eval(f, -0.25) == -1.0);
        CHECK(eval(f, 1.25) == 1.0);
    }
    SUBCASE("j/n reproduces samples on an awkward grid") {
        const auto g = GridFunction::sample(1440, [](double x) { return std::sin(7.0 * x); });
        for (std::size_t j = 0; j < g.size(); ++j)
            REQUIRE(eval(g, g.point(j)) == g[j]);
    }
}

TEST_CASE("quotient_norm") {
    SUBCASE("cos(2 pi x) has norm 1 and zero shift") {
        const auto q = GridFunction::sample(1440, [](double x) { return std::cos(2.0 * std::numbers::pi * x); });
        const auto rep = quotient_norm(q);
        CHECK(rep.norm == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(rep.shift == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("p + q from the shifted-norm example") {
        const auto pq = GridFunction::sample(1440, [](double x) {
            return -4.0 * (x - 0.5) * (x - 0.5) + std::cos(2.0 * std::numbers::pi * x);
        });
        const auto rep = quotient_norm(pq);
        CHECK(rep.norm == doctest::Approx(0.586).epsilon(1e-3));
        CHECK(rep.shift == doctest::Approx(0.414).epsilon(1e-3));
    }
    SUBCASE("constants are the zero class") {
        CHECK(quotient_norm(GridFunction::constant(10, -2.5)).norm == 0.0);
    }
}

TEST_CASE("quotient_dist") {
    const auto g = GridFunction::sample(64, [](double x) { return std::sin(2.0 * std::numbers::pi * x); });
    CHECK(quotient_dist(g, g) == 0.0);
    CHECK(quotient_dist(g + 7.0, g) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(quotient_dist(g, GridFunction::constant(32, 0.0)), std::invalid_argument);
}

TEST_CASE("lipschitz_estimate") {
    CHECK(lipschitz_estimate(GridFunction::constant(16, 4.0)) == 0.0);

    SUBCASE("tent of slope 1") {
        const auto tent = GridFunction::sample(1440, [](double x) { return std::min(x, 1.0 - x); });
        CHECK(lipschitz_estimate(tent) == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("sawtooth x: the seam jump dominates") {
        const auto saw = GridFunction::sample(100, [](double x) { return x; });
        CHECK(lipschitz_estimate(saw) == doctest::Approx(99.0).epsilon(1e-12));
    }
    SUBCASE("triangular bump of slope 2/9") {
        const auto bump = perturb(GridFunction::constant(1440, 0.0), TriangularBump{0.05, 0.7, 2.0 / 9.0});
        CHECK(lipschitz_estimate(bump) == doctest::Approx(2.0 / 9.0).epsilon(1e-9));
    }
}

TEST_CASE("normalize_sup_zero and grid_slack") {
    const GridFunction f({1.0, 3.0, -2.0});
    const auto g = normalize_sup_zero(f);
    CHECK(g.max() == 0.0);
    CHECK(g[2] == -5.0);
    CHECK(grid_slack(1.0, 1440) == doctest::Approx(2.0 / 1440.0));
}
