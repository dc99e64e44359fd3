#include "function_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace subaction::cli {

void write_function_csv(std::ostream& out, const GridFunction& f) {
    out << "x,value\n";
    char line[96];
    for (std::size_t j = 0; j < f.size(); ++j) {
        std::snprintf(line, sizeof line, "%.16e,%.16e\n", f.point(j), f[j]);
        out << line;
    }
}

void write_function_csv(const std::filesystem::path& path, const GridFunction& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_function_csv(out, f);
}

PeriodicPiecewiseLinear read_function_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read function file " + path.string());
    std::vector<std::pair<double, double>> points;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        if (points.empty() && line.rfind("x,", 0) == 0)
            continue;
        std::istringstream row(line);
        double x = 0.0, v = 0.0;
        char comma = 0;
        if (!(row >> x >> comma >> v) || comma != ',')
            throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) + ": expected 'x,value'");
        points.emplace_back(x, v);
    }
    if (points.empty())
        throw std::invalid_argument(path.string() + ": no data rows");
    return PeriodicPiecewiseLinear(std::move(points));
}

PotentialSpec load_potential(const std::string& spec) {
    constexpr std::string_view prefix = "file:";
    if (spec.rfind(prefix, 0) == 0) {
        const std::filesystem::path path = spec.substr(prefix.size());
        return PotentialSpec::from_points(spec, read_function_csv(path));
    }
    return PotentialSpec::from_name(spec);
}

} // namespace subaction::cli
