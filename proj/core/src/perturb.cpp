#include "subaction/perturb.hpp"

#include "subaction/errors.hpp"
#include "subaction/operators.hpp"
#include "subaction/oracle.hpp"
#include "subaction/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subaction {

namespace {

double circular_distance(double x, double y) {
    const double d = wrap_unit(x - y);
    return std::min(d, 1.0 - d);
}

struct BumpEvaluator {
    double x;

    double operator()(const TriangularBump& b) const {
        if (!(b.eps > 0.0) || !(b.slope > 0.0))
            throw std::invalid_argument("triangular bump needs eps > 0 and slope > 0");
        const double d = circular_distance(x, b.center);
        return d >= b.eps ? 0.0 : b.slope * (b.eps - d);
    }

    double operator()(const GaussianBump& b) const {
        if (!(b.eps > 0.0))
            throw std::invalid_argument("gaussian bump needs eps > 0");
        const double d = circular_distance(x, b.center);
        const double v = std::exp(-(d * d) / (b.eps * b.eps)) / (b.eps * std::sqrt(std::numbers::pi));
        return v < 1e-300 ? 0.0 : b.scale * v;
    }
};

} // namespace

double bump_value(const Bump& bump, double x) { return std::visit(BumpEvaluator{x}, bump); }

GridFunction perturb(const GridFunction& f, const Bump& bump, bool allow_seam_wrap) {
    if (const auto* tri = std::get_if<TriangularBump>(&bump);
        tri && !allow_seam_wrap && (tri->center - tri->eps < 0.0 || tri->center + tri->eps > 1.0))
        throw PreconditionViolated("bump support crosses the seam at 0");
    return f + GridFunction::sample(f.size(), [&](double x) { return bump_value(bump, x); });
}

bool CircleArc::contains(double x, double tol) const noexcept {
    const double offset = wrap_unit(x - start);
    return offset <= length + tol || offset >= 1.0 - tol;
}

double CircleArc::overlap(const CircleArc& other) const noexcept {
    if (length >= 1.0 || other.length >= 1.0)
        return std::min(length, other.length);
    // place `other` relative to this->start, try both unrollings
    const double s = wrap_unit(other.start - start);
    double total = 0.0;
    for (double shift : {s, s - 1.0}) {
        const double lo = std::max(0.0, shift);
        const double hi = std::min(length, shift + other.length);
        total += std::max(0.0, hi - lo);
    }
    return total;
}

SupportReport support_check(const CircleMap& map, const GridFunction& potential, const GridFunction& f,
                            const TriangularBump& bump, double tol) {
    SupportReport out;
    const double a = bump.center;
    const double eps = bump.eps;
    out.support = {wrap_unit(a - eps), 2.0 * eps};
    const double ta = map.forward(a);
    out.image = {wrap_unit(ta - 2.0 * eps), 4.0 * eps};
    if (out.support.overlap(out.image) > 1e-12)
        throw PreconditionViolated("bump support I and its image T(I) overlap");

    const Branch dominant = realizer_at(map, potential, f, ta, tol);
    if (dominant == Branch::Both)
        throw PreconditionViolated("bump centre is a preimage of a turning point");
    const auto pre = map.preimages(ta);
    const Branch through_center =
        circular_distance(pre[0], a) <= circular_distance(pre[1], a) ? Branch::First : Branch::Second;
    out.dominant_is_bump_branch = dominant == through_center;

    const GridFunction fe = perturb(f, bump, true);
    const GridFunction dpsi = psi(map, potential, fe) - psi(map, potential, f);
    const GridFunction dh = H_and_c(map, potential, fe).h - H_and_c(map, potential, f).h;

    out.h_min_increase = dh.min();
    out.h_max_increase = dh.max();
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double x = f.point(j);
        out.psi_change_max = std::max(out.psi_change_max, std::abs(dpsi[j]));
        if (!out.image.contains(x)) {
            out.psi_change_outside_image = std::max(out.psi_change_outside_image, std::abs(dpsi[j]));
            if (!out.support.contains(x))
                out.h_change_outside = std::max(out.h_change_outside, std::abs(dh[j]));
        }
    }

    const double lip = std::max({lipschitz_estimate(potential), lipschitz_estimate(f), bump.slope});
    out.bound = bump.slope * eps / 2.0 + grid_slack(lip, f.size());
    out.holds = out.psi_change_outside_image <= tol && out.h_min_increase >= -tol && out.h_change_outside <= tol &&
                out.h_max_increase <= out.bound;
    return out;
}

double degenerate_distance_floor(const CircleMap& map, const GridFunction& potential, const GridFunction& u,
                                 double slack) {
    const double defect = quotient_dist(G_op(map, potential, u), u);
    return std::max(defect / slack, 1e-12);
}

RateResult contraction_ratio(const CircleMap& map, const GridFunction& potential, const GridFunction& f,
                             const GridFunction& u) {
    const double slack = grid_slack(std::max(lipschitz_estimate(potential), lipschitz_estimate(f)), f.size());
    RateResult out;
    out.dist_before = quotient_dist(f, u);
    if (out.dist_before <= degenerate_distance_floor(map, potential, u, slack))
        throw DegenerateDistance("|f - u| is below the grid resolution of the reference subaction");
    out.dist_after = quotient_dist(G_op(map, potential, f), u);
    out.ratio = out.dist_after / out.dist_before;
    return out;
}

PairDistances pair_distances(const CircleMap& map, const GridFunction& potential, const GridFunction& f0,
                             const GridFunction& g0) {
    return {quotient_dist(f0, g0), quotient_dist(G_op(map, potential, f0), G_op(map, potential, g0))};
}

PairDistances counterexample1(std::size_t n) {
    if (n == 0 || n % 16 != 0)
        throw PreconditionViolated("counterexample1 needs a grid size divisible by 16");
    const GridFunction a = PotentialSpec::counterex1().sample(n);
    return pair_distances(CircleMap::doubling(), a, a, GridFunction::constant(n, 0.0));
}

RateSeries rate_series(const GridFunction& potential, const CircleMap& map, const SolveConfig& cfg,
                       const GridFunction& u_ref) {
    RateSeries out{.solve = SolveReport{.u = u_ref}};
    const double slack = grid_slack(lipschitz_estimate(potential), potential.size());
    out.floor = degenerate_distance_floor(map, potential, u_ref, slack);
    out.solve = solve(potential, map, cfg, [&](int k, const GridFunction& before, const GridFunction& after) {
        RateStep step;
        step.iteration = k;
        step.dist_before = quotient_dist(before, u_ref);
        step.dist_after = quotient_dist(after, u_ref);
        if (step.dist_before > out.floor)
            step.ratio = step.dist_after / step.dist_before;
        out.steps.push_back(step);
    });
    return out;
}

PerturbationSetup half_rate_setup(std::size_t n, double eps) {
    return {CircleMap::minus_doubling(), PotentialSpec::quadratic_shifted().sample(n),
            analytic_subaction(PotentialKind::QuadraticShifted, n), TriangularBump{eps, 0.7, 2.0 / 9.0}};
}

PerturbationSetup unit_rate_setup(std::size_t n, double eps) {
    return {CircleMap::minus_doubling(), PotentialSpec::quadratic_shifted().sample(n),
            analytic_subaction(PotentialKind::QuadraticShifted, n), TriangularBump{eps, 2.0 / 3.0, 2.0 / 9.0}};
}

PerturbationSetup support_setup(std::size_t n) {
    return {CircleMap::doubling(), PotentialSpec::sinsq().sample(n),
            GridFunction::sample(n, [](double x) { return -(x - 0.5) * (x - 0.5); }),
            TriangularBump{0.1, 0.7, 1.0}};
}

GridFunction coincident_maximizer_example(std::size_t n) {
    return GridFunction::sample(n, [](double x) {
        if (x < 3.0 / 8.0)
            return 16.0 / 3.0 * x - 2.0;
        if (x < 3.0 / 4.0)
            return 32.0 * x * x - 36.0 * x + 9.0;
        if (x <= 7.0 / 8.0)
            return 64.0 * x * x - 104.0 * x + 42.0;
        return -16.0 * x + 14.0;
    });
}

std::array<GaussianBump, 2> coincident_maximizer_perturbation() {
    constexpr double eps = 0.005;
    return {GaussianBump{eps, 0.75 - 0.015, 1.0 / 500.0}, GaussianBump{eps, 0.0 + 0.015, -1.0 / 1000.0}};
}

} // namespace subaction
