#pragma once

#include "subaction/grid_function.hpp"
#include "subaction/potential.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace subaction::cli {

/// Writes `x,value` rows for j/n, 17 significant digits, LF endings.
void write_function_csv(std::ostream& out, const GridFunction& f);
void write_function_csv(const std::filesystem::path& path, const GridFunction& f);

/// Reads `x,value` rows (header optional, '#' comments skipped) as periodic piecewise-linear data.
/// A file holding exactly the grid j/n is reproduced sample for sample by sample(n).
PeriodicPiecewiseLinear read_function_csv(const std::filesystem::path& path);

/// Catalog name, or `file:PATH` for data on disk.
PotentialSpec load_potential(const std::string& spec);

} // namespace subaction::cli
