#include "subaction/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subaction {

namespace {

// (A + f) at the two preimages of x
std::array<double, 2> branch_values(const CircleMap& map, const GridFunction& potential, const GridFunction& f,
                                    double x) {
    const auto [y1, y2] = map.preimages(x);
    return {eval(potential, y1) + eval(f, y1), eval(potential, y2) + eval(f, y2)};
}

} // namespace

GridFunction psi(const CircleMap& map, const GridFunction& potential, const GridFunction& f) {
    require_same_grid(potential, f);
    const std::size_t n = f.size();
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto [v1, v2] = branch_values(map, potential, f, f.point(j));
        out[j] = v2 > v1 ? v2 : v1;
    }
    return GridFunction(std::move(out));
}

GridFunction hat_L(const CircleMap& map, const GridFunction& potential, const GridFunction& f, double m) {
    return psi(map, potential, f) - m;
}

GridFunction L_op(const CircleMap& map, const GridFunction& potential, const GridFunction& f) {
    return normalize_sup_zero(psi(map, potential, f));
}

HResult H_and_c(const CircleMap& map, const GridFunction& potential, const GridFunction& f) {
    const GridFunction p = psi(map, potential, f);
    std::vector<double> h(f.size());
    for (std::size_t j = 0; j < h.size(); ++j)
        h[j] = 0.5 * (f[j] + p[j]);
    GridFunction hf(std::move(h));
    const double c = hf.max();
    return {std::move(hf), c};
}

GridFunction G_op(const CircleMap& map, const GridFunction& potential, const GridFunction& f) {
    auto [h, c] = H_and_c(map, potential, f);
    return h - c;
}

GridFunction residual_R(const CircleMap& map, const GridFunction& potential, const GridFunction& u, double m) {
    require_same_grid(potential, u);
    std::vector<double> r(u.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        const double x = u.point(j);
        r[j] = eval(u, map.forward(x)) - u[j] - potential[j] + m;
    }
    return GridFunction(std::move(r));
}

std::vector<std::size_t> RealizerMap::turning_points() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < labels.size(); ++j)
        if (labels[j] == Branch::Both)
            out.push_back(j);
    return out;
}

Branch realizer_at(const CircleMap& map, const GridFunction& potential, const GridFunction& f, double x,
                   double tol) {
    const auto [v1, v2] = branch_values(map, potential, f, x);
    if (std::abs(v1 - v2) <= tol)
        return Branch::Both;
    return v1 > v2 ? Branch::First : Branch::Second;
}

RealizerMap realizers(const CircleMap& map, const GridFunction& potential, const GridFunction& f, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("realizer tolerance must be positive");
    require_same_grid(potential, f);
    RealizerMap out;
    out.tolerance = tol;
    out.labels.resize(f.size());
    for (std::size_t j = 0; j < f.size(); ++j)
        out.labels[j] = realizer_at(map, potential, f, f.point(j), tol);
    return out;
}

} // namespace subaction
