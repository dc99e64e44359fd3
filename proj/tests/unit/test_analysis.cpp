#include "doctest.h"

#include "subaction/analysis.hpp"
#include "subaction/errors.hpp"
#include "subaction/operators.hpp"
#include "subaction/oracle.hpp"
#include "subaction/perturb.hpp"
#include "subaction/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace subaction;

namespace {

bool has(const std::vector<std::size_t>& v, std::size_t j) { return std::find(v.begin(), v.end(), j) != v.end(); }

} // namespace

TEST_CASE("coincident maximizer example") {
    const std::size_t n = 1440;
    const auto f = coincident_maximizer_example(n);
    const auto zero = GridFunction::constant(n, 0.0);
    const auto map = CircleMap::doubling();

    SUBCASE("norm and shift") {
        const auto q = quotient_norm(f);
        CHECK(q.norm == doctest::Approx(1.0));
        CHECK(q.shift == doctest::Approx(1.0));
    }
    SUBCASE("beta vanishes at 3/4, whose preimages 3/8 and 7/8 also attain the norm") {
        CHECK(std::abs(beta(map, 0.75, f, zero)) < 1e-12);
        CHECK(beta(map, 0.3, f, zero) > 0.1);
    }
    SUBCASE("not generic") {
        const auto r = generic_membership(map, f, zero, default_genericity_tol(f, zero));
        CHECK(!r.in_set);
        CHECK(!r.degenerate);
        CHECK(has(r.maximizers, 1080));
        CHECK(has(r.violations, 1080));
    }
    SUBCASE("Gaussian perturbation separates the maximizers") {
        const auto [q, w] = coincident_maximizer_perturbation();
        const auto g = perturb(zero, q) + (perturb(zero, w) - zero);
        const double d = quotient_dist(g, zero);
        CHECK(d == doctest::Approx(0.16926).epsilon(2e-3));
        const auto fe = f + g;
        const auto r = generic_membership(map, fe, zero, default_genericity_tol(fe, zero));
        CHECK(r.in_set);
        CHECK(r.violations.empty());
        for (std::size_t j : r.maximizers)
            CHECK(beta(map, GridFunction::point(j, n), fe, zero) > 0.0);
    }
    SUBCASE("both-sided check also sees the minimizer at 0") {
        const auto r = generic_membership(map, f, zero, 1e-9, true);
        CHECK(has(r.negative_maximizers, 0));
    }
}

TEST_CASE("generic_membership edge cases") {
    const auto map = CircleMap::doubling();
    const auto f = GridFunction::sample(256, [](double x) { return std::sin(2 * std::numbers::pi * x); });
    SUBCASE("f = g is degenerate") {
        const auto r = generic_membership(map, f, f, 1e-9);
        CHECK(r.degenerate);
        CHECK(!r.in_set);
    }
    SUBCASE("f and f + c are degenerate") {
        CHECK(generic_membership(map, f, f + 3.0, 1e-9).degenerate);
    }
    SUBCASE("tol must be positive") {
        CHECK_THROWS_AS(generic_membership(map, f, f, 0.0), std::invalid_argument);
    }
    SUBCASE("grid mismatch") {
        CHECK_THROWS(generic_membership(map, f, GridFunction::constant(128, 0.0), 1e-9));
    }
    SUBCASE("sine is generic under doubling") {
        const auto zero = GridFunction::constant(256, 0.0);
        CHECK(generic_membership(map, f, zero, 1e-9).in_set);
    }
}

TEST_CASE("t1_bounds") {
    const std::size_t n = 1440;
    const auto map = CircleMap::minus_doubling();
    const auto a = PotentialSpec::quadratic().sample(n);
    const auto u = analytic_subaction(PotentialKind::Quadratic, n);

    SUBCASE("at u everything collapses") {
        const auto r = t1_bounds(map, a, u, u);
        CHECK(r.dist == 0.0);
        CHECK(r.m == doctest::Approx(-1.0 / 36.0).epsilon(1e-5));
        CHECK(r.h_gap < 1e-5);
        CHECK(r.upper_holds);
        CHECK(r.lower_holds);
        CHECK(r.fundamental_holds);
    }
    SUBCASE("reference representative does not matter") {
        const auto f = u + GridFunction::sample(n, [](double x) { return 0.05 * std::cos(2 * std::numbers::pi * x); });
        const auto r1 = t1_bounds(map, a, f, u);
        const auto r2 = t1_bounds(map, a, f, u + 4.0);
        CHECK(r1.dist == doctest::Approx(r2.dist));
        CHECK(r1.shifted_gap == doctest::Approx(r2.shifted_gap));
        CHECK(r1.upper_holds);
        CHECK(r1.lower_holds);
        CHECK(r1.fundamental_holds);
    }
}

TEST_CASE("h_identity_zero") {
    const std::size_t n = 1440;
    const auto map = CircleMap::minus_doubling();
    const auto a = PotentialSpec::quadratic().sample(n);
    const double m = -1.0 / 36.0;

    SUBCASE("at a fixed point of G there is a zero") {
        const auto report = solve(a, map, SolveConfig{});
        const auto z = h_identity_zero(map, a, report.u, report.m_estimate, 1e-6);
        CHECK(std::abs(z.value) <= 1e-6);
        CHECK(z.x == GridFunction::point(z.index, n));
    }
    SUBCASE("a generic f still crosses") {
        const auto f = GridFunction::sample(n, [](double x) { return 0.2 * std::sin(2 * std::numbers::pi * x); });
        const auto z = h_identity_zero(map, a, f, m, 1e-12);
        const auto h = H_and_c(map, a - m, f).h - f;
        const std::size_t next = (z.index + 1) % n;
        CHECK((std::abs(z.value) <= 1e-12 || h[z.index] * h[next] < 0.0));
    }
    SUBCASE("at the analytic subaction the first grid point already qualifies") {
        const auto u = analytic_subaction(PotentialKind::Quadratic, n);
        CHECK(h_identity_zero(map, a, u, m, 1e-6).index == 0);
    }
    SUBCASE("one step from the potential") {
        const auto f = G_op(map, a, a);
        const auto z = h_identity_zero(map, a, f, m, 1e-9);
        CHECK(std::abs(z.value) < grid_slack(1.0, n));
    }
    SUBCASE("strict sign throws NotFound") {
        const auto zero = GridFunction::constant(n, 0.0);
        CHECK_THROWS_AS(h_identity_zero(map, zero, zero, -1.0, 1e-9), NotFound);
    }
}

TEST_CASE("fast_step_condition") {
    const std::size_t n = 1440;
    const auto map = CircleMap::minus_doubling();
    const auto a = PotentialSpec::quadratic_shifted().sample(n);
    const auto u = analytic_subaction(PotentialKind::QuadraticShifted, n);
    const auto f = perturb(u, TriangularBump{0.05, 0.7, 2.0 / 9.0});
    const auto r = fast_step_condition(map, a, f, u);
    CHECK(r.dist == doctest::Approx(quotient_dist(f, u)));
    CHECK(r.top >= -1e-12);
    if (r.opposite_signs)
        CHECK(r.top <= r.dist / 2.0 + grid_slack(1.0, n));
}
