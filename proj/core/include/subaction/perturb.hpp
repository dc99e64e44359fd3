#pragma once

#include "subaction/circle_map.hpp"
#include "subaction/grid_function.hpp"
#include "subaction/solver.hpp"

#include <array>
#include <optional>
#include <variant>
#include <vector>

namespace subaction {

/// Tent of slope k on [a - eps, a + eps], peak k*eps at a, zero elsewhere.
struct TriangularBump {
    double eps;
    double center;
    double slope;
};

/// scale * exp(-d^2/eps^2) / (eps sqrt(pi)), d the circular distance to center.
struct GaussianBump {
    double eps;
    double center;
    double scale;
};

using Bump = std::variant<TriangularBump, GaussianBump>;

/// Throws std::invalid_argument on eps <= 0 or a non-positive triangular slope.
double bump_value(const Bump& bump, double x);

/// f + bump. A triangular support crossing the seam throws PreconditionViolated unless allow_seam_wrap.
GridFunction perturb(const GridFunction& f, const Bump& bump, bool allow_seam_wrap = false);

/// Closed arc [start, start + length] on the circle.
struct CircleArc {
    double start;
    double length;

    bool contains(double x, double tol = 1e-12) const noexcept;
    /// Length of the intersection of the two arcs' interiors.
    double overlap(const CircleArc& other) const noexcept;
};

/// Differences between f and f + bump under psi and H.
struct SupportReport {
    CircleArc support;                  ///< I
    CircleArc image;                    ///< T(I)
    bool dominant_is_bump_branch = false; ///< realizer of T(a) is the branch through a
    double psi_change_outside_image = 0.0; ///< max |psi(f_eps) - psi(f)| off T(I)
    double psi_change_max = 0.0;         ///< max |psi(f_eps) - psi(f)|
    double h_min_increase = 0.0;         ///< min H(f_eps) - H(f)
    double h_max_increase = 0.0;         ///< max H(f_eps) - H(f)
    double h_change_outside = 0.0;       ///< max |H(f_eps) - H(f)| off T(I) u I
    double bound = 0.0;                  ///< k eps / 2 + slack
    bool holds = false;
};

/**
Checks where a triangular perturbation of f changes psi and H.
Throws PreconditionViolated when I and T(I) overlap or T(a) is a turning
point of A + f (within tol).
*/
SupportReport support_check(const CircleMap& map, const GridFunction& potential, const GridFunction& f,
                            const TriangularBump& bump, double tol = 1e-9);

struct RateResult {
    double dist_before = 0.0; ///< |f - u|
    double dist_after = 0.0;  ///< |G(f) - u|
    double ratio = 0.0;
};

/// Distance below which |G(f) - u| / |f - u| is dominated by the reference's own grid defect |G(u) - u|.
double degenerate_distance_floor(const CircleMap& map, const GridFunction& potential, const GridFunction& u,
                                 double slack);

/// Throws DegenerateDistance when |f - u| is at or below degenerate_distance_floor.
RateResult contraction_ratio(const CircleMap& map, const GridFunction& potential, const GridFunction& f,
                             const GridFunction& u);

struct PairDistances {
    double dist_before = 0.0; ///< |f0 - g0|
    double dist_after = 0.0;  ///< |G(f0) - G(g0)|
};

PairDistances pair_distances(const CircleMap& map, const GridFunction& potential, const GridFunction& f0,
                             const GridFunction& g0);

/// f0 = A = counterex1 potential, g0 = 0, doubling map. Throws PreconditionViolated unless 16 | n.
PairDistances counterexample1(std::size_t n);

struct RateStep {
    int iteration = 0;
    double dist_before = 0.0;
    double dist_after = 0.0;
    std::optional<double> ratio; ///< empty when dist_before is below the degeneracy floor
};

struct RateSeries {
    SolveReport solve;
    std::vector<RateStep> steps{};
    double floor = 0.0;
};

/// Solves as `solve` does and logs |f_k - u_ref| -> |f_{k+1} - u_ref| at every step.
RateSeries rate_series(const GridFunction& potential, const CircleMap& map, const SolveConfig& cfg,
                       const GridFunction& u_ref);

/// Potential, reference subaction, and bump of a near-fixed-point experiment.
struct PerturbationSetup {
    CircleMap map;
    GridFunction potential;
    GridFunction u;
    TriangularBump bump;
};

/// quadratic-shifted under minus-doubling, u analytic, bump (0.05, 0.7, 2/9): ratio 1/2.
PerturbationSetup half_rate_setup(std::size_t n = 1440, double eps = 0.05);

/// Same potential with the bump centred on the fixed point 2/3: ratio 1.
PerturbationSetup unit_rate_setup(std::size_t n = 1440, double eps = 0.05);

/// A = sin^2(2 pi x), f = -(x - 1/2)^2, bump (0.1, 0.7, 1) under doubling.
PerturbationSetup support_setup(std::size_t n = 1440);

/// Piecewise f whose norm-attaining point 3/4 shares its value with both preimages (g = 0).
GridFunction coincident_maximizer_example(std::size_t n);

/// The two Gaussian bumps that separate the maximizers of coincident_maximizer_example.
std::array<GaussianBump, 2> coincident_maximizer_perturbation();

} // namespace subaction
