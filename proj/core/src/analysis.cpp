#include "subaction/analysis.hpp"

#include "subaction/errors.hpp"
#include "subaction/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subaction {

double beta(const CircleMap& map, double x, const GridFunction& f, const GridFunction& g) {
    const GridFunction diff = f - g;
    const auto [norm, shift] = quotient_norm(diff);
    const GridFunction h = diff + shift;
    const auto [y1, y2] = map.preimages(x);
    const double at_x = norm - std::abs(eval(h, x));
    const double at_pre = std::min(norm - std::abs(eval(h, y1)), norm - std::abs(eval(h, y2)));
    return at_x + at_pre;
}

double default_genericity_tol(const GridFunction& f, const GridFunction& g) {
    return 1e-8 * std::max(1.0, quotient_dist(f, g));
}

GenericityReport generic_membership(const CircleMap& map, const GridFunction& f, const GridFunction& g,
                                    double tol, bool both_sides) {
    if (!(tol > 0.0))
        throw std::invalid_argument("genericity tolerance must be positive");
    const GridFunction diff = f - g;
    const auto [norm, shift] = quotient_norm(diff);

    GenericityReport report;
    if (norm <= tol) {
        report.degenerate = true;
        return report;
    }

    auto shares_value_with_preimage = [&](std::size_t r) {
        const auto [y1, y2] = map.preimages(diff.point(r));
        return std::abs(diff[r] - eval(diff, y1)) <= tol || std::abs(diff[r] - eval(diff, y2)) <= tol;
    };

    for (std::size_t j = 0; j < diff.size(); ++j) {
        const double h = diff[j] + shift;
        if (h >= norm - tol) {
            report.maximizers.push_back(j);
            if (shares_value_with_preimage(j))
                report.violations.push_back(j);
        } else if (both_sides && h <= -norm + tol) {
            report.negative_maximizers.push_back(j);
            if (shares_value_with_preimage(j))
                report.violations.push_back(j);
        }
    }
    report.in_set = report.violations.empty();
    return report;
}

T1Report t1_bounds(const CircleMap& map, const GridFunction& potential, const GridFunction& f,
                   const GridFunction& u) {
    T1Report out;
    const GridFunction u0 = normalize_sup_zero(u);
    out.m = 2.0 * H_and_c(map, potential, u0).c;
    const GridFunction shifted = potential - out.m;

    out.dist = quotient_dist(f, u0);
    const double d = quotient_norm(f - u0).shift;

    const auto [hf, cf] = H_and_c(map, shifted, f);
    out.h_gap = sup_norm(hf - f);
    const GridFunction gf = hf - cf;
    out.shifted_gap = sup_norm(gf - u0 + (d + cf));

    const double lip = std::max({lipschitz_estimate(potential), lipschitz_estimate(f), lipschitz_estimate(u0)});
    out.slack = grid_slack(lip, f.size());
    out.upper_holds = out.h_gap <= 2.0 * out.dist + out.slack;
    out.lower_holds = out.shifted_gap >= out.dist - out.h_gap - out.slack;
    out.fundamental_holds = out.shifted_gap <= out.dist + out.slack;
    return out;
}

ZeroCrossing h_identity_zero(const CircleMap& map, const GridFunction& potential, const GridFunction& f, double m,
                             double tol) {
    const GridFunction p = H_and_c(map, potential - m, f).h - f;
    const std::size_t n = p.size();
    for (std::size_t j = 0; j < n; ++j)
        if (std::abs(p[j]) <= tol)
            return {j, p.point(j), p[j]};

    bool found = false;
    ZeroCrossing best;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = (j + 1) % n;
        if ((p[j] < 0.0) == (p[k] < 0.0))
            continue;
        const std::size_t pick = std::abs(p[j]) <= std::abs(p[k]) ? j : k;
        if (!found || std::abs(p[pick]) < std::abs(best.value)) {
            best = {pick, p.point(pick), p[pick]};
            found = true;
        }
    }
    if (!found)
        throw NotFound("H(f) - f has no zero or sign change on the grid");
    return best;
}

FastStepCheck fast_step_condition(const CircleMap& map, const GridFunction& potential, const GridFunction& f,
                                  const GridFunction& g) {
    const GridFunction diff = f - g;
    const auto [norm, d] = quotient_norm(diff);
    const auto [hf, cf] = H_and_c(map, potential, f);
    const auto [hg, cg] = H_and_c(map, potential, g);
    const GridFunction w = (hf - cf) - (hg - cg) + (cf - cg + d);

    FastStepCheck out;
    out.dist = norm;
    out.z1 = w.argmax();
    out.top = w[out.z1];
    const double z = w.point(out.z1);
    const auto pre = map.preimages(z);
    const Branch branch = realizer_at(map, potential, f, z, 0.0);
    const double y = branch == Branch::Second ? pre[1] : pre[0];
    out.at_point = diff[out.z1] + d;
    out.at_realizer = eval(diff, y) + d;
    out.opposite_signs =
        (out.at_point > 0.0 && out.at_realizer < 0.0) || (out.at_point < 0.0 && out.at_realizer > 0.0);
    return out;
}

} // namespace subaction
