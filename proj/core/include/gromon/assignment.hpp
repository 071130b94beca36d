#pragma once

#include "gromon/types.hpp"

#include <vector>

namespace gromon {

// Solvers for the linear assignment problem on a rows x cols cost table with
// rows <= cols. The result maps every row to a distinct column.
//
// Ties are resolved deterministically: the shortest-path scan keeps the
// first (lowest-index) column among equal reduced costs.

/// Minimum-cost assignment (Hungarian method with potentials, O(n^2 m)).
std::vector<std::size_t> solve_assignment_min(const Matrix& cost);

/// Maximum-profit assignment.
std::vector<std::size_t> solve_assignment_max(const Matrix& profit);

/// Assignment minimising the largest selected cost; among bottleneck-optimal
/// assignments the sum of costs is minimised.
std::vector<std::size_t> solve_bottleneck_assignment(const Matrix& cost);

/// Sum of cost(i, assignment[i]).
double assignment_cost(const Matrix& cost, const std::vector<std::size_t>& assignment);

}  // namespace gromon
