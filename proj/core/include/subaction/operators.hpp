#pragma once

#include "subaction/circle_map.hpp"
#include "subaction/grid_function.hpp"

#include <cstdint>
#include <vector>

namespace subaction {

// Function-space operators for a potential A under a circle map T.
// Values at the preimages tau_i(x_j) come from eval (linear interpolation),
// so every identity checked against the continuum carries an O(K/n) slack.

/// psi(f)(x) = max over T(y) = x of (A + f)(y). Ties resolve to the first branch.
GridFunction psi(const CircleMap& map, const GridFunction& potential, const GridFunction& f);

/// psi(f) - m: the calibrated-subaction operator with m(A) supplied.
GridFunction hat_L(const CircleMap& map, const GridFunction& potential, const GridFunction& f, double m);

/// psi(f) shifted so that its largest sample is 0.
GridFunction L_op(const CircleMap& map, const GridFunction& potential, const GridFunction& f);

struct HResult {
    GridFunction h; ///< H(f) = (f + psi(f))/2
    double c;       ///< c_f = max sample of H(f)
};

HResult H_and_c(const CircleMap& map, const GridFunction& potential, const GridFunction& f);

/// G(f) = H(f) - c_f. Invariant under f -> f + const; max sample is exactly 0.
GridFunction G_op(const CircleMap& map, const GridFunction& potential, const GridFunction& f);

/// R(x) = u(T(x)) - u(x) - A(x) + m. Nonnegative for a calibrated subaction, zero on the Mather set.
GridFunction residual_R(const CircleMap& map, const GridFunction& potential, const GridFunction& u, double m);

enum class Branch : std::uint8_t { First, Second, Both };

/// Realizing branch per grid point; Both marks turning points.
struct RealizerMap {
    std::vector<Branch> labels;
    double tolerance = 0.0;

    std::vector<std::size_t> turning_points() const;
};

/// Throws std::invalid_argument unless tol > 0.
RealizerMap realizers(const CircleMap& map, const GridFunction& potential, const GridFunction& f, double tol);

/// Realizer of a single (possibly off-grid) point.
Branch realizer_at(const CircleMap& map, const GridFunction& potential, const GridFunction& f, double x,
                   double tol);

} // namespace subaction
