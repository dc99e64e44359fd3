#include "subaction/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace subaction {

GridFunction::GridFunction(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2)
        throw std::invalid_argument("GridFunction needs at least 2 samples, got " +
                                    std::to_string(samples_.size()));
    for (std::size_t j = 0; j < samples_.size(); ++j)
        if (!std::isfinite(samples_[j]))
            throw std::invalid_argument("GridFunction sample " + std::to_string(j) + " is not finite");
}

GridFunction GridFunction::constant(std::size_t n, double value) {
    return GridFunction(std::vector<double>(n, value));
}

double GridFunction::max() const noexcept { return *std::max_element(samples_.begin(), samples_.end()); }
double GridFunction::min() const noexcept { return *std::min_element(samples_.begin(), samples_.end()); }

std::size_t GridFunction::argmax() const noexcept {
    return static_cast<std::size_t>(std::max_element(samples_.begin(), samples_.end()) - samples_.begin());
}

GridFunction GridFunction::operator+(const GridFunction& other) const {
    require_same_grid(*this, other);
    std::vector<double> out(size());
    for (std::size_t j = 0; j < size(); ++j)
        out[j] = samples_[j] + other.samples_[j];
    return GridFunction(std::move(out));
}

GridFunction GridFunction::operator-(const GridFunction& other) const {
    require_same_grid(*this, other);
    std::vector<double> out(size());
    for (std::size_t j = 0; j < size(); ++j)
        out[j] = samples_[j] - other.samples_[j];
    return GridFunction(std::move(out));
}

GridFunction GridFunction::operator+(double c) const {
    std::vector<double> out(samples_);
    for (double& v : out)
        v += c;
    return GridFunction(std::move(out));
}

GridFunction GridFunction::operator*(double c) const {
    std::vector<double> out(samples_);
    for (double& v : out)
        v *= c;
    return GridFunction(std::move(out));
}

double wrap_unit(double x) noexcept {
    double r = x - std::floor(x);
    // floor can leave r == 1.0 for tiny negative x
    return r >= 1.0 ? 0.0 : r;
}

double eval(const GridFunction& f, double x) {
    const std::size_t n = f.size();
    const double t = wrap_unit(x) * static_cast<double>(n);
    const double nearest = std::nearbyint(t);
    // snap so that x = j/n returns samples[j] exactly despite rounding in j/n*n
    if (std::abs(t - nearest) <= 1e-9 * std::max(1.0, t))
        return f[static_cast<std::size_t>(nearest) % n];
    const double cell = std::floor(t);
    const double frac = t - cell;
    const std::size_t j = static_cast<std::size_t>(cell) % n;
    const std::size_t k = (j + 1) % n;
    return f[j] + frac * (f[k] - f[j]);
}

QuotientRep quotient_norm(const GridFunction& f) noexcept {
    const auto [lo, hi] = std::minmax_element(f.samples().begin(), f.samples().end());
    return {(*hi - *lo) / 2.0, -(*hi + *lo) / 2.0};
}

double quotient_dist(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g);
    double hi = f[0] - g[0];
    double lo = hi;
    for (std::size_t j = 1; j < f.size(); ++j) {
        const double d = f[j] - g[j];
        hi = std::max(hi, d);
        lo = std::min(lo, d);
    }
    return (hi - lo) / 2.0;
}

double sup_norm(const GridFunction& f) noexcept {
    double m = 0.0;
    for (double v : f.samples())
        m = std::max(m, std::abs(v));
    return m;
}

double lipschitz_estimate(const GridFunction& f) noexcept {
    const std::size_t n = f.size();
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        worst = std::max(worst, std::abs(f[(j + 1) % n] - f[j]));
    return worst * static_cast<double>(n);
}

GridFunction normalize_sup_zero(const GridFunction& f) { return f - f.max(); }

void require_same_grid(const GridFunction& f, const GridFunction& g) {
    if (f.size() != g.size())
        throw std::invalid_argument("grid size mismatch: " + std::to_string(f.size()) + " vs " +
                                    std::to_string(g.size()));
}

} // namespace subaction
