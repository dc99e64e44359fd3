#include "subaction/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace subaction {

OrbitResult periodic_mA(const PotentialSpec& potential, const CircleMap& map, int pmax) {
    if (pmax < 1 || pmax > kDefaultMaxPeriod)
        throw std::out_of_range("pmax must lie in [1, " + std::to_string(kDefaultMaxPeriod) + "]");

    struct Candidate {
        double average;
        int period;
        std::uint64_t numerator, denominator;
    };
    std::vector<Candidate> candidates;
    OrbitResult result;
    result.m_value = -std::numeric_limits<double>::infinity();

    for (int p = 1; p <= pmax; ++p) {
        const std::uint64_t den = periodic_denominator(map.kind(), p);
        double best = -std::numeric_limits<double>::infinity();
        for (std::uint64_t j = 0; j < den; ++j) {
            double sum = potential(static_cast<double>(j) / static_cast<double>(den));
            std::uint64_t cur = j;
            bool canonical = true;
            int steps = 1;
            for (; steps < p; ++steps) {
                cur = forward_numerator(map.kind(), cur, den);
                if (cur == j)
                    break; // exact period divides p and is smaller
                if (cur < j) {
                    canonical = false;
                    break;
                }
                sum += potential(static_cast<double>(cur) / static_cast<double>(den));
            }
            if (!canonical || steps < p)
                continue;
            const double avg = sum / static_cast<double>(p);
            best = std::max(best, avg);
            candidates.push_back({avg, p, j, den});
        }
        if (std::isfinite(best))
            result.period_best[p] = best;
        result.m_value = std::max(result.m_value, best);
    }

    const double tie = 1e-12 * std::max(1.0, std::abs(result.m_value));
    for (const auto& c : candidates) {
        if (c.average < result.m_value - tie)
            continue;
        std::vector<double> orbit;
        std::uint64_t cur = c.numerator;
        for (int k = 0; k < c.period; ++k) {
            orbit.push_back(static_cast<double>(cur) / static_cast<double>(c.denominator));
            cur = forward_numerator(map.kind(), cur, c.denominator);
        }
        if (result.maximizers.empty()) {
            result.orbit = orbit;
            result.period = c.period;
        }
        result.maximizers.push_back(std::move(orbit));
    }
    return result;
}

std::optional<CircleMap> analytic_subaction_map(PotentialKind kind) {
    switch (kind) {
    case PotentialKind::Quadratic:
    case PotentialKind::QuadraticShifted:
        return CircleMap::minus_doubling();
    case PotentialKind::ExampleEx:
        return CircleMap::doubling();
    default:
        return std::nullopt;
    }
}

double analytic_subaction_value(PotentialKind kind, double x) {
    const double y = wrap_unit(x);
    switch (kind) {
    case PotentialKind::Quadratic:
    case PotentialKind::QuadraticShifted:
        return std::max(-y * y / 3.0 + y / 9.0, -y * y / 3.0 + 5.0 * y / 9.0 - 2.0 / 9.0);
    case PotentialKind::ExampleEx:
        return 4.0 / 3.0 * std::min(y, 1.0 - y) - 2.0 / 3.0;
    case PotentialKind::Constant:
        return 0.0;
    default:
        throw std::invalid_argument("no closed-form subaction for this potential");
    }
}

GridFunction analytic_subaction(PotentialKind kind, std::size_t n) {
    return normalize_sup_zero(GridFunction::sample(n, [kind](double x) { return analytic_subaction_value(kind, x); }));
}

CrossCheckReport cross_check(const PotentialSpec& potential, const CircleMap& map, const SolveReport& report,
                             int pmax) {
    CrossCheckReport out;
    out.m_oracle = periodic_mA(potential, map, pmax).m_value;
    out.m_estimate = report.m_estimate;
    out.m_gap = std::abs(report.m_estimate - out.m_oracle);
    const auto natural = analytic_subaction_map(potential.kind());
    if (potential.kind() == PotentialKind::Constant || (natural && *natural == map))
        out.u_gap = quotient_dist(report.u, analytic_subaction(potential.kind(), report.u.size()));
    return out;
}

} // namespace subaction
