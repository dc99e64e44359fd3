#include "subaction/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subaction {

PeriodicPiecewiseLinear::PeriodicPiecewiseLinear(std::vector<std::pair<double, double>> points) {
    if (points.empty())
        throw std::invalid_argument("piecewise-linear function needs at least one point");
    for (auto& [x, v] : points) {
        if (!std::isfinite(x) || !std::isfinite(v))
            throw std::invalid_argument("non-finite breakpoint");
        if (x < 0.0 || x > 1.0)
            throw std::invalid_argument("breakpoint abscissa outside [0,1]");
    }
    std::sort(points.begin(), points.end());
    // x = 1 is the same circle point as x = 0
    if (points.size() > 1 && points.back().first == 1.0) {
        if (points.front().first == 0.0) {
            if (std::abs(points.front().second - points.back().second) > 1e-12)
                throw std::invalid_argument("values at x=0 and x=1 disagree");
        } else {
            points.insert(points.begin(), {0.0, points.back().second});
        }
        points.pop_back();
    } else if (points.size() == 1 && points.front().first == 1.0) {
        points.front().first = 0.0;
    }
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].first == points[i - 1].first)
            throw std::invalid_argument("duplicate breakpoint abscissa");
    points_ = std::move(points);
}

double PeriodicPiecewiseLinear::operator()(double x) const {
    if (points_.size() == 1)
        return points_.front().second;
    const double y = wrap_unit(x);
    auto upper = std::upper_bound(points_.begin(), points_.end(), y,
                                  [](double value, const auto& p) { return value < p.first; });
    // left neighbour (wrapping to the last point shifted by -1) and right neighbour (wrapping to first + 1)
    double x0, v0, x1, v1;
    if (upper == points_.begin()) {
        x0 = points_.back().first - 1.0;
        v0 = points_.back().second;
    } else {
        x0 = std::prev(upper)->first;
        v0 = std::prev(upper)->second;
    }
    if (upper == points_.end()) {
        x1 = points_.front().first + 1.0;
        v1 = points_.front().second;
    } else {
        x1 = upper->first;
        v1 = upper->second;
    }
    if (y == x0)
        return v0;
    return v0 + (v1 - v0) * (y - x0) / (x1 - x0);
}

GridFunction PeriodicPiecewiseLinear::sample(std::size_t n) const {
    if (points_.size() == n) {
        bool on_grid = true;
        for (std::size_t j = 0; j < n && on_grid; ++j)
            on_grid = std::abs(points_[j].first - GridFunction::point(j, n)) <= 1e-12;
        if (on_grid) {
            std::vector<double> values(n);
            for (std::size_t j = 0; j < n; ++j)
                values[j] = points_[j].second;
            return GridFunction(std::move(values));
        }
    }
    return GridFunction::sample(n, [this](double x) { return (*this)(x); });
}

namespace {

const PeriodicPiecewiseLinear& example_ex_shape() {
    static const PeriodicPiecewiseLinear shape({{0.0, -1.0}, {0.25, 0.0}, {0.5, -1.0}, {0.75, 0.0}});
    return shape;
}

const PeriodicPiecewiseLinear& counterex1_shape() {
    static const PeriodicPiecewiseLinear shape({{0.0, -1.0},
                                                {1.0 / 8, 0.0},
                                                {3.0 / 16, -1.0},
                                                {1.0 / 4, 0.0},
                                                {1.0 / 2, -1.0},
                                                {3.0 / 4, 0.0},
                                                {13.0 / 16, -1.0},
                                                {7.0 / 8, 0.0}});
    return shape;
}

} // namespace

PotentialSpec PotentialSpec::quadratic() { return {PotentialKind::Quadratic, "quadratic"}; }
PotentialSpec PotentialSpec::quadratic_shifted() { return {PotentialKind::QuadraticShifted, "quadratic-shifted"}; }
PotentialSpec PotentialSpec::sinsq() { return {PotentialKind::SinSq, "sinsq"}; }
PotentialSpec PotentialSpec::example_ex() { return {PotentialKind::ExampleEx, "example-ex"}; }
PotentialSpec PotentialSpec::counterex1() { return {PotentialKind::CounterEx1, "counterex1"}; }

PotentialSpec PotentialSpec::constant(double value) {
    PotentialSpec spec(PotentialKind::Constant, value == 0.0 ? "zero" : "constant");
    spec.constant_ = value;
    return spec;
}

PotentialSpec PotentialSpec::from_points(std::string name, PeriodicPiecewiseLinear data) {
    PotentialSpec spec(PotentialKind::Samples, std::move(name));
    spec.data_.push_back(std::move(data));
    return spec;
}

PotentialSpec PotentialSpec::from_samples(std::string name, const GridFunction& samples) {
    std::vector<std::pair<double, double>> points;
    points.reserve(samples.size());
    for (std::size_t j = 0; j < samples.size(); ++j)
        points.emplace_back(samples.point(j), samples[j]);
    return from_points(std::move(name), PeriodicPiecewiseLinear(std::move(points)));
}

PotentialSpec PotentialSpec::from_name(std::string_view name) {
    if (name == "quadratic")
        return quadratic();
    if (name == "quadratic-shifted")
        return quadratic_shifted();
    if (name == "sinsq")
        return sinsq();
    if (name == "example-ex")
        return example_ex();
    if (name == "counterex1")
        return counterex1();
    if (name == "zero")
        return constant(0.0);
    throw std::invalid_argument("unknown potential '" + std::string(name) + "'");
}

double PotentialSpec::operator()(double x) const {
    const double y = wrap_unit(x);
    switch (kind_) {
    case PotentialKind::Quadratic:
        return -(y - 0.5) * (y - 0.5);
    case PotentialKind::QuadraticShifted:
        return -(y - 0.5) * (y - 0.5) + 1.0 / 36.0;
    case PotentialKind::SinSq: {
        const double s = std::sin(2.0 * std::numbers::pi * y);
        return s * s;
    }
    case PotentialKind::ExampleEx:
        return example_ex_shape()(y);
    case PotentialKind::CounterEx1:
        return counterex1_shape()(y);
    case PotentialKind::Constant:
        return constant_;
    case PotentialKind::Samples:
        return data_.front()(y);
    }
    return 0.0;
}

GridFunction PotentialSpec::sample(std::size_t n) const {
    if (kind_ == PotentialKind::Samples)
        return data_.front().sample(n);
    return GridFunction::sample(n, [this](double x) { return (*this)(x); });
}

std::vector<std::string_view> catalog_names() {
    return {"quadratic", "quadratic-shifted", "sinsq", "example-ex", "counterex1", "zero"};
}

} // namespace subaction
