#include "subaction/circle_map.hpp"

#include "subaction/grid_function.hpp"

#include <stdexcept>
#include <string>

namespace subaction {

std::string_view CircleMap::name() const noexcept {
    return kind_ == MapKind::Doubling ? "doubling" : "minus-doubling";
}

double CircleMap::forward(double x) const noexcept {
    const double y = wrap_unit(x);
    return kind_ == MapKind::Doubling ? wrap_unit(2.0 * y) : wrap_unit(-2.0 * y);
}

std::array<double, 2> CircleMap::preimages(double x) const noexcept {
    const double y = wrap_unit(x);
    if (kind_ == MapKind::Doubling)
        return {0.5 * y, 0.5 * (y + 1.0)};
    return {wrap_unit(0.5 * (1.0 - y)), wrap_unit(0.5 * (2.0 - y))};
}

CircleMap parse_circle_map(std::string_view name) {
    if (name == "doubling")
        return CircleMap::doubling();
    if (name == "minus-doubling")
        return CircleMap::minus_doubling();
    throw std::invalid_argument("unknown map '" + std::string(name) + "' (expected doubling|minus-doubling)");
}

std::uint64_t periodic_denominator(MapKind kind, int period) {
    if (period < 1)
        throw std::out_of_range("period must be >= 1");
    if (period > 62)
        throw std::overflow_error("2^" + std::to_string(period) + " overflows 64-bit arithmetic");
    const std::uint64_t pow2 = std::uint64_t{1} << period;
    if (kind == MapKind::Doubling)
        return pow2 - 1;
    // |(-2)^p - 1|
    return period % 2 == 0 ? pow2 - 1 : pow2 + 1;
}

std::uint64_t forward_numerator(MapKind kind, std::uint64_t numerator, std::uint64_t denominator) noexcept {
    const std::uint64_t doubled = (2 * numerator) % denominator;
    if (kind == MapKind::Doubling)
        return doubled;
    return (denominator - doubled) % denominator;
}

std::vector<double> periodic_points(const CircleMap& map, int period, int max_period) {
    if (period < 1 || period > max_period)
        throw std::out_of_range("period " + std::to_string(period) + " outside [1, " +
                                std::to_string(max_period) + "]");
    const std::uint64_t den = periodic_denominator(map.kind(), period);
    std::vector<double> points;
    points.reserve(den);
    for (std::uint64_t j = 0; j < den; ++j)
        points.push_back(static_cast<double>(j) / static_cast<double>(den));
    return points;
}

} // namespace subaction
