#pragma once

#include "subaction/circle_map.hpp"
#include "subaction/grid_function.hpp"
#include "subaction/potential.hpp"
#include "subaction/solver.hpp"

#include <map>
#include <optional>
#include <vector>

namespace subaction {

/// Best periodic-orbit average of a potential.
struct OrbitResult {
    double m_value = 0.0;
    int period = 0;
    std::vector<double> orbit;                  ///< first best orbit found, starting at its minimum point
    std::map<int, double> period_best;          ///< exact period -> best Birkhoff average
    std::vector<std::vector<double>> maximizers; ///< every orbit tied with m_value (within 1e-12)
};

/**
Brute-force lower bound for m(A): the maximum of (1/p) sum_k A(T^k x) over
periodic orbits of exact period p <= pmax. Orbits are generated with exact
integer arithmetic on j/D and deduplicated by their minimum point; A is
evaluated with its closed form when the potential has one.

Throws std::out_of_range unless 1 <= pmax <= 20.
*/
OrbitResult periodic_mA(const PotentialSpec& potential, const CircleMap& map, int pmax);

/// Map under which analytic_subaction(kind) is calibrated, if there is one.
std::optional<CircleMap> analytic_subaction_map(PotentialKind kind);

/**
Closed-form calibrated subaction before normalization:
  Quadratic, QuadraticShifted (minus-doubling): max(-x^2/3 + x/9, -x^2/3 + 5x/9 - 2/9)
  ExampleEx (doubling):                          (4/3) min(x, 1-x) - 2/3
  Constant:                                      0
Throws std::invalid_argument for other kinds.
*/
double analytic_subaction_value(PotentialKind kind, double x);

/// analytic_subaction_value sampled on n points, max sample 0.
GridFunction analytic_subaction(PotentialKind kind, std::size_t n);

struct CrossCheckReport {
    double m_oracle = 0.0;
    double m_estimate = 0.0;
    double m_gap = 0.0;           ///< |m_estimate - m_oracle|
    std::optional<double> u_gap;  ///< quotient_dist(u, analytic u) when a closed form exists for this map
};

/// Compares a solver run against the periodic-orbit oracle and the analytic subaction.
CrossCheckReport cross_check(const PotentialSpec& potential, const CircleMap& map, const SolveReport& report,
                             int pmax);

} // namespace subaction
