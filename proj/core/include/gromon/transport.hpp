#pragma once

#include "gromon/types.hpp"

namespace gromon {

struct TransportResult {
  Matrix plan;       // optimal flow, rows sum to supply, cols to demand
  Vector row_potential;
  Vector col_potential;
  double cost = 0.0;
  std::size_t pivots = 0;
};

/// Solves min <cost, plan> over nonnegative plans with the given row and
/// column sums (a transportation LP). North-west-corner start followed by
/// primal simplex pivots on the basis spanning tree (MODI potentials).
///
/// supply and demand must be nonnegative with equal totals within kTolMass.
/// The returned potentials certify optimality:
/// cost(i,j) - row_potential(i) - col_potential(j) >= -tolerance everywhere
/// and == 0 on basic cells.
TransportResult solve_transport(const Matrix& cost, const Vector& supply, const Vector& demand);

}  // namespace gromon
