#pragma once

#include "subaction/analysis.hpp"
#include "subaction/circle_map.hpp"
#include "subaction/errors.hpp"
#include "subaction/grid_function.hpp"
#include "subaction/operators.hpp"
#include "subaction/oracle.hpp"
#include "subaction/perturb.hpp"
#include "subaction/potential.hpp"
#include "subaction/solver.hpp"
