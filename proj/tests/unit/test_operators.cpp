#include "doctest.h"

#include "subaction/operators.hpp"
#include "subaction/oracle.hpp"
#include "subaction/perturb.hpp"
#include "subaction/potential.hpp"

#include <algorithm>
#include <cmath>

using namespace subaction;

namespace {

constexpr std::size_t kN = 1440;

double max_abs_diff(const GridFunction& a, const GridFunction& b) { return sup_norm(a - b); }

struct QuadraticCase {
    CircleMap map = CircleMap::minus_doubling();
    GridFunction shifted = PotentialSpec::quadratic_shifted().sample(kN);
    GridFunction plain = PotentialSpec::quadratic().sample(kN);
    GridFunction u = analytic_subaction(PotentialKind::Quadratic, kN);
    double slack = grid_slack(1.0, kN);
};

} // namespace

TEST_CASE("psi") {
    const auto zero = GridFunction::constant(kN, 0.0);

    SUBCASE("constants pass through") {
        const auto out = psi(CircleMap::doubling(), zero, GridFunction::constant(kN, 2.5));
        CHECK(out.min() == 2.5);
        CHECK(out.max() == 2.5);
    }
    SUBCASE("identity sample under doubling picks the upper branch (x+1)/2") {
        const auto id = GridFunction::sample(kN, [](double x) { return x; });
        const auto out = psi(CircleMap::doubling(), zero, id);
        // away from the seam cell, where the sawtooth interpolant wraps
        for (std::size_t j = 0; j + 2 < kN; ++j)
            REQUIRE(out[j] == doctest::Approx((id.point(j) + 1.0) / 2.0).epsilon(1e-14));
    }
    SUBCASE("analytic subaction is a fixed point once m(A) = 0") {
        QuadraticCase q;
        CHECK(max_abs_diff(psi(q.map, q.shifted, q.u), q.u) <= q.slack);
        // interpolation defect at half-grid preimages is second order here
        CHECK(max_abs_diff(psi(q.map, q.shifted, q.u), q.u) < 1e-6);
    }
    SUBCASE("grid mismatch") {
        CHECK_THROWS_AS(psi(CircleMap::doubling(), zero, GridFunction::constant(10, 0.0)), std::invalid_argument);
    }
}

TEST_CASE("hat_L") {
    SUBCASE("fixed point with the exact m") {
        QuadraticCase q;
        CHECK(max_abs_diff(hat_L(q.map, q.plain, q.u, -1.0 / 36.0), q.u) < 1e-6);
    }
    SUBCASE("constant potential") {
        const auto out = hat_L(CircleMap::doubling(), GridFunction::constant(kN, 4.0), GridFunction::constant(kN, 0.0),
                               4.0);
        CHECK(sup_norm(out) == 0.0);
    }
    SUBCASE("example-ex subaction with m = -1/3") {
        const auto a = PotentialSpec::example_ex().sample(kN);
        const auto u = analytic_subaction(PotentialKind::ExampleEx, kN);
        // both are piecewise linear with kinks on the grid, so interpolation is exact
        CHECK(max_abs_diff(hat_L(CircleMap::doubling(), a, u, -1.0 / 3.0), u) < 1e-12);
    }
}

TEST_CASE("L_op") {
    QuadraticCase q;
    const auto f = GridFunction::sample(kN, [](double x) { return std::sin(6.0 * x); });
    CHECK(L_op(q.map, q.plain, f).max() == 0.0);
    CHECK(quotient_dist(L_op(q.map, q.plain, q.u), q.u) < 1e-6);
    CHECK(sup_norm(L_op(CircleMap::doubling(), GridFunction::constant(kN, 0.0), GridFunction::constant(kN, 5.0))) ==
          0.0);
}

TEST_CASE("H_and_c") {
    QuadraticCase q;
    SUBCASE("normalized potential: H(u) = u and c_u = max u = 0") {
        const auto [h, c] = H_and_c(q.map, q.shifted, q.u);
        CHECK(max_abs_diff(h, q.u) < 1e-6);
        CHECK(c == doctest::Approx(0.0).epsilon(1e-6));
    }
    SUBCASE("zero data") {
        const auto z = GridFunction::constant(kN, 0.0);
        const auto [h, c] = H_and_c(CircleMap::doubling(), z, z);
        CHECK(sup_norm(h) == 0.0);
        CHECK(c == 0.0);
    }
    SUBCASE("m(A) = 2c at the fixed point") {
        const auto [h, c] = H_and_c(q.map, q.plain, q.u);
        CHECK(2.0 * c == doctest::Approx(-1.0 / 36.0).epsilon(1e-5));
    }
}

TEST_CASE("G_op") {
    QuadraticCase q;
    SUBCASE("fixed point") {
        CHECK(max_abs_diff(G_op(q.map, q.plain, q.u), q.u) < 1e-6);
    }
    SUBCASE("constants are invisible and the output has max 0") {
        const auto f = GridFunction::sample(kN, [](double x) { return std::cos(10.0 * x) * x; });
        const auto g1 = G_op(q.map, q.plain, f);
        const auto g2 = G_op(q.map, q.plain, f + 17.0);
        CHECK(max_abs_diff(g1, g2) < 1e-13);
        CHECK(g1.max() == 0.0);
    }
    SUBCASE("not a strict contraction on the counterexample potential") {
        const auto a = PotentialSpec::counterex1().sample(kN);
        const auto zero = GridFunction::constant(kN, 0.0);
        CHECK(quotient_dist(a, zero) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(quotient_dist(G_op(CircleMap::doubling(), a, a), G_op(CircleMap::doubling(), a, zero)) ==
              doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("residual_R") {
    SUBCASE("example-ex: zero on [1/4, 3/4], 2/3 at 0") {
        const auto a = PotentialSpec::example_ex().sample(kN);
        const auto u = analytic_subaction(PotentialKind::ExampleEx, kN);
        const auto r = residual_R(CircleMap::doubling(), a, u, -1.0 / 3.0);
        for (std::size_t j = kN / 4; j <= 3 * kN / 4; ++j)
            REQUIRE(std::abs(r[j]) < 1e-12);
        CHECK(r[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(r.min() > -1e-12);
    }
    SUBCASE("zero potential") {
        const auto z = GridFunction::constant(kN, 0.0);
        CHECK(sup_norm(residual_R(CircleMap::doubling(), z, z, 0.0)) == 0.0);
    }
}

TEST_CASE("realizers") {
    QuadraticCase q;
    const auto map = realizers(q.map, q.shifted, q.u, 1e-9);

    SUBCASE("only 1/2 is a tie; the dominant branch also swaps across the seam") {
        const auto turning = map.turning_points();
        REQUIRE(!turning.empty());
        for (std::size_t j : turning)
            CHECK(std::abs(q.u.point(j) - 0.5) < 2.0 / kN);
        CHECK(std::find(turning.begin(), turning.end(), kN / 2) != turning.end());
        CHECK(map.labels[1] == Branch::First);
        CHECK(map.labels[kN - 1] == Branch::Second);
    }
    SUBCASE("dominant symbol at 2/3 is the branch fixing 2/3") {
        CHECK(map.labels[2 * kN / 3] == Branch::Second);
        CHECK(q.map.preimages(2.0 / 3.0)[1] == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("total tie") {
        const auto z = GridFunction::constant(kN, 0.0);
        const auto all = realizers(CircleMap::doubling(), z, z, 1e-12);
        CHECK(all.turning_points().size() == kN);
    }
    SUBCASE("tolerance must be positive") {
        CHECK_THROWS_AS(realizers(q.map, q.shifted, q.u, 0.0), std::invalid_argument);
    }
}
