#pragma once

#include "subaction/grid_function.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subaction {

/// Periodic piecewise-linear function through (x_i, v_i), x_i in [0,1).
class PeriodicPiecewiseLinear {
public:
    /// Points are sorted; a point at x = 1 is folded onto x = 0. Throws on duplicates or empty input.
    explicit PeriodicPiecewiseLinear(std::vector<std::pair<double, double>> points);

    double operator()(double x) const;
    GridFunction sample(std::size_t n) const;

    const std::vector<std::pair<double, double>>& points() const noexcept { return points_; }

private:
    std::vector<std::pair<double, double>> points_;
};

enum class PotentialKind { Quadratic, QuadraticShifted, SinSq, ExampleEx, CounterEx1, Constant, Samples };

/**
A potential A, either from the built-in catalog (with a closed-form
evaluator) or backed by data (piecewise-linear through file points).

Catalog:
  quadratic          -(x - 1/2)^2
  quadratic-shifted  -(x - 1/2)^2 + 1/36        (m(A) = 0 under minus-doubling)
  sinsq              sin^2(2 pi x)
  example-ex         0 at 1/4, 3/4; -1 at 0, 1/2, 1; linear between
  counterex1         0 at 1/8, 1/4, 3/4, 7/8; -1 at 0, 3/16, 1/2, 13/16, 1
  zero               0
*/
class PotentialSpec {
public:
    static PotentialSpec quadratic();
    static PotentialSpec quadratic_shifted();
    static PotentialSpec sinsq();
    static PotentialSpec example_ex();
    static PotentialSpec counterex1();
    static PotentialSpec constant(double value);
    static PotentialSpec from_points(std::string name, PeriodicPiecewiseLinear data);
    static PotentialSpec from_samples(std::string name, const GridFunction& samples);

    /// Catalog lookup by CLI name; throws std::invalid_argument for unknown names.
    static PotentialSpec from_name(std::string_view name);

    PotentialKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

    double operator()(double x) const;

    /// Samples on j/n. Data-backed potentials whose points are exactly that grid are copied verbatim.
    GridFunction sample(std::size_t n) const;

private:
    PotentialSpec(PotentialKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    PotentialKind kind_;
    std::string name_;
    double constant_ = 0.0;
    std::vector<PeriodicPiecewiseLinear> data_; // 0 or 1 element
};

std::vector<std::string_view> catalog_names();

} // namespace subaction
