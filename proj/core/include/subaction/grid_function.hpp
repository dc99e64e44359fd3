#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace subaction {

/**
Real function on the circle R/Z, stored as samples on the uniform grid
x_j = j/n, j = 0..n-1. Off-grid values are obtained by periodic linear
interpolation (see eval).

Values are immutable once built; arithmetic returns new functions.
*/
class GridFunction {
public:
    /// Throws std::invalid_argument if fewer than 2 samples or any sample is not finite.
    explicit GridFunction(std::vector<double> samples);

    static GridFunction constant(std::size_t n, double value);

    /// Samples `fn` at j/n.
    template <class Fn>
    static GridFunction sample(std::size_t n, Fn&& fn) {
        std::vector<double> values(n);
        for (std::size_t j = 0; j < n; ++j)
            values[j] = fn(point(j, n));
        return GridFunction(std::move(values));
    }

    std::size_t size() const noexcept { return samples_.size(); }
    std::span<const double> samples() const noexcept { return samples_; }
    double operator[](std::size_t j) const { return samples_[j]; }

    /// Grid abscissa j/n.
    double point(std::size_t j) const noexcept { return point(j, size()); }
    static double point(std::size_t j, std::size_t n) noexcept {
        return static_cast<double>(j) / static_cast<double>(n);
    }

    double max() const noexcept;
    double min() const noexcept;
    std::size_t argmax() const noexcept;

    GridFunction operator+(const GridFunction& other) const;
    GridFunction operator-(const GridFunction& other) const;
    GridFunction operator+(double c) const;
    GridFunction operator-(double c) const { return *this + (-c); }
    GridFunction operator*(double c) const;
    GridFunction operator-() const { return *this * -1.0; }

    bool operator==(const GridFunction&) const = default;

private:
    std::vector<double> samples_;
};

/// Reduces x to [0,1).
double wrap_unit(double x) noexcept;

/// Periodic piecewise-linear evaluation; exact at grid points.
double eval(const GridFunction& f, double x);

/// Quotient norm of f in C0/R together with the constant realizing it.
struct QuotientRep {
    double norm = 0.0;  ///< (max f - min f)/2
    double shift = 0.0; ///< -(max f + min f)/2, so |f + shift|_0 = norm
};

QuotientRep quotient_norm(const GridFunction& f) noexcept;

/// quotient_norm(f - g).norm; throws std::invalid_argument on grid-size mismatch.
double quotient_dist(const GridFunction& f, const GridFunction& g);

/// Sup norm max_j |f_j|.
double sup_norm(const GridFunction& f) noexcept;

/// Largest secant slope between neighbouring samples, seam included.
double lipschitz_estimate(const GridFunction& f) noexcept;

/// Representative of the class of f whose maximum sample is 0.
GridFunction normalize_sup_zero(const GridFunction& f);

/// Interpolation error budget 2K/n used wherever a continuum identity is checked on a grid.
inline double grid_slack(double lipschitz, std::size_t n) noexcept {
    return 2.0 * lipschitz / static_cast<double>(n);
}

void require_same_grid(const GridFunction& f, const GridFunction& g);

} // namespace subaction
