#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace subaction {

enum class MapKind { Doubling, MinusDoubling };

/**
The expanding circle map T and its two inverse branches.

  Doubling:       T(x) =  2x mod 1,  branches x/2,      (x+1)/2
  MinusDoubling:  T(x) = -2x mod 1,  branches (1-x)/2,  (2-x)/2

Points are reduced to [0,1).
*/
class CircleMap {
public:
    constexpr explicit CircleMap(MapKind kind) noexcept : kind_(kind) {}

    static constexpr CircleMap doubling() noexcept { return CircleMap(MapKind::Doubling); }
    static constexpr CircleMap minus_doubling() noexcept { return CircleMap(MapKind::MinusDoubling); }

    constexpr MapKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept;

    double forward(double x) const noexcept;

    /// (first branch, second branch); T maps both back to x.
    std::array<double, 2> preimages(double x) const noexcept;

    bool operator==(const CircleMap&) const = default;

private:
    MapKind kind_;
};

/// Parses "doubling" / "minus-doubling"; throws std::invalid_argument otherwise.
CircleMap parse_circle_map(std::string_view name);

constexpr int kDefaultMaxPeriod = 20;

/// Denominator D with T^p(x) = x  <=>  x = j/D.
std::uint64_t periodic_denominator(MapKind kind, int period);

/// Numerator of T(j/D) over the same denominator D.
std::uint64_t forward_numerator(MapKind kind, std::uint64_t numerator, std::uint64_t denominator) noexcept;

/**
All solutions of T^p(x) = x in [0,1), in increasing order. Points of lower
exact period dividing p are included; callers dedupe by orbit.

Throws std::out_of_range when p < 1 or p > max_period, and
std::overflow_error when 2^p does not fit the integer type.
*/
std::vector<double> periodic_points(const CircleMap& map, int period, int max_period = kDefaultMaxPeriod);

} // namespace subaction
