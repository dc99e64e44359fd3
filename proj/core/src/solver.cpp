#include "subaction/solver.hpp"

#include "subaction/operators.hpp"

#include <stdexcept>

namespace subaction {

void SolveConfig::validate() const {
    if (n < 2)
        throw std::invalid_argument("grid size n must be >= 2");
    if (!(tol > 0.0))
        throw std::invalid_argument("tol must be positive");
    if (max_iters < 1)
        throw std::invalid_argument("max_iters must be >= 1");
    if (initial == InitialGuess::File) {
        if (!initial_function)
            throw std::invalid_argument("initial guess 'file' requires an initial function");
        if (initial_function->size() != n)
            throw std::invalid_argument("initial function grid size differs from n");
    }
}

SolveReport solve(const GridFunction& potential, const CircleMap& map, const SolveConfig& cfg,
                  const IterationObserver& observer) {
    cfg.validate();
    if (potential.size() != cfg.n)
        throw std::invalid_argument("potential is not sampled on the configured grid");

    GridFunction f = [&] {
        switch (cfg.initial) {
        case InitialGuess::Potential:
            return normalize_sup_zero(potential);
        case InitialGuess::File:
            return normalize_sup_zero(*cfg.initial_function);
        case InitialGuess::Zero:
            break;
        }
        return GridFunction::constant(cfg.n, 0.0);
    }();

    SolveReport report{.u = f};
    report.residuals.reserve(static_cast<std::size_t>(cfg.max_iters));
    report.c_series.reserve(static_cast<std::size_t>(cfg.max_iters));

    for (int k = 0; k < cfg.max_iters; ++k) {
        auto [h, c] = H_and_c(map, potential, f);
        GridFunction next = h - c;
        const double residual = quotient_dist(next, f);
        report.residuals.push_back(residual);
        report.c_series.push_back(c);
        if (observer)
            observer(k, f, next);
        f = std::move(next);
        report.iterations = k + 1;
        if (residual <= cfg.tol) {
            report.converged = true;
            break;
        }
    }

    report.c_final = H_and_c(map, potential, f).c;
    report.m_estimate = 2.0 * report.c_final;
    report.u = std::move(f);
    return report;
}

SolveReport solve(const PotentialSpec& potential, const CircleMap& map, const SolveConfig& cfg,
                  const IterationObserver& observer) {
    return solve(potential.sample(cfg.n), map, cfg, observer);
}

std::vector<std::size_t> mather_candidates(const CircleMap& map, const GridFunction& potential,
                                           const GridFunction& u, double m, double tol) {
    const GridFunction r = residual_R(map, potential, u, m);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] < tol)
            out.push_back(j);
    return out;
}

} // namespace subaction
