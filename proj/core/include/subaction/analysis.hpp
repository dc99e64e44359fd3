#pragma once

#include "subaction/circle_map.hpp"
#include "subaction/grid_function.hpp"

#include <cstddef>
#include <vector>

namespace subaction {

/**
beta(x, f, g) = |f-g| - |h(x)| + min_i (|f-g| - |h(tau_i(x))|)
evaluated on the optimally shifted difference h = (f - g) + alpha_{f-g}.
Nonnegative up to interpolation error; zero exactly when x and one of its
preimages both attain the quotient norm of f - g.
*/
double beta(const CircleMap& map, double x, const GridFunction& f, const GridFunction& g);

/// Membership of (f, g) in the set where no norm-attaining point shares its value with a preimage.
struct GenericityReport {
    std::vector<std::size_t> maximizers;          ///< grid points where h is within tol of +|f-g|
    std::vector<std::size_t> negative_maximizers; ///< within tol of -|f-g|; only filled when both_sides
    std::vector<std::size_t> violations;          ///< maximizers r with (f-g)(r) == (f-g)(tau_i(r)) within tol
    bool in_set = false;
    bool degenerate = false; ///< f - g is constant; reported as not in the set
};

/// Throws std::invalid_argument unless tol > 0.
GenericityReport generic_membership(const CircleMap& map, const GridFunction& f, const GridFunction& g,
                                    double tol, bool both_sides = false);

/// Default maximizer band 1e-8 * max(1, |f-g|).
double default_genericity_tol(const GridFunction& f, const GridFunction& g);

/// Quantities of the near-fixed-point estimates, with the potential shifted so that m(A) = 0.
struct T1Report {
    double m = 0.0;               ///< 2 c_u used for the shift
    double dist = 0.0;            ///< |f - u|
    double h_gap = 0.0;           ///< |H(f) - f|_0
    double shifted_gap = 0.0;     ///< |G(f) - u + (d + c_f)|_0, d = alpha_{f-u}
    double slack = 0.0;
    bool upper_holds = false;       ///< h_gap <= 2 |f - u| + slack
    bool lower_holds = false;       ///< shifted_gap >= |f - u| - h_gap - slack
    bool fundamental_holds = false; ///< shifted_gap <= |f - u| + slack
};

/// u is a reference subaction for the potential (any representative).
T1Report t1_bounds(const CircleMap& map, const GridFunction& potential, const GridFunction& f,
                   const GridFunction& u);

struct ZeroCrossing {
    std::size_t index = 0;
    double x = 0.0;
    double value = 0.0; ///< (H - Id)(f) at index, potential shifted by -m
};

/**
Grid point where p = H(f) - f (for the potential A - m) vanishes within tol
or changes sign; the first exact zero wins, otherwise the sign change with
the smaller |p|. At such a point f(z) ~ max over preimages of (A - m + f).
Throws NotFound when p keeps one strict sign.
*/
ZeroCrossing h_identity_zero(const CircleMap& map, const GridFunction& potential, const GridFunction& f, double m,
                             double tol);

/// One-step contraction diagnostic at the maximizer z1 of G(f) - G(g) + k, k = c_f - c_g + alpha_{f-g}.
struct FastStepCheck {
    std::size_t z1 = 0;
    double top = 0.0;            ///< (G(f) - G(g) + k)(z1)
    double at_point = 0.0;       ///< (f - g)(z1) + alpha
    double at_realizer = 0.0;    ///< (f - g)(tau_a(z1)) + alpha, a the realizer of f at z1
    bool opposite_signs = false; ///< then top <= |f - g| / 2
    double dist = 0.0;           ///< |f - g|
};

FastStepCheck fast_step_condition(const CircleMap& map, const GridFunction& potential, const GridFunction& f,
                                  const GridFunction& g);

} // namespace subaction
