#pragma once

#include "subaction/circle_map.hpp"
#include "subaction/grid_function.hpp"
#include "subaction/potential.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace subaction {

enum class InitialGuess { Zero, Potential, File };

struct SolveConfig {
    std::size_t n = 1440;
    double tol = 1e-9;   ///< stop when quotient_dist(f_{k+1}, f_k) <= tol
    int max_iters = 10000;
    InitialGuess initial = InitialGuess::Zero;
    std::optional<GridFunction> initial_function; ///< required when initial == File

    /// Throws std::invalid_argument if tol <= 0, max_iters < 1, n < 2, or File without a function.
    void validate() const;
};

struct SolveReport {
    GridFunction u;                 ///< last iterate, max sample 0
    int iterations = 0;
    std::vector<double> residuals{}; ///< quotient_dist(f_{k+1}, f_k), one per iteration
    std::vector<double> c_series{};  ///< c_{f_k} for the sup-zero iterate f_k
    double c_final = 0.0;           ///< c of the returned u
    double m_estimate = 0.0;        ///< 2 * c_final
    bool converged = false;
};

/// Called after each step with the iteration index and (f_k, f_{k+1}).
using IterationObserver = std::function<void(int, const GridFunction&, const GridFunction&)>;

/**
Runs f_{k+1} = G(f_k) until consecutive iterates are within cfg.tol in the
quotient norm, or cfg.max_iters steps. Non-convergence is reported through
SolveReport::converged, never thrown.
*/
SolveReport solve(const GridFunction& potential, const CircleMap& map, const SolveConfig& cfg,
                  const IterationObserver& observer = {});

SolveReport solve(const PotentialSpec& potential, const CircleMap& map, const SolveConfig& cfg,
                  const IterationObserver& observer = {});

/// Grid indices where residual_R(u) < tol: candidates for the Mather set.
std::vector<std::size_t> mather_candidates(const CircleMap& map, const GridFunction& potential,
                                           const GridFunction& u, double m, double tol);

} // namespace subaction
