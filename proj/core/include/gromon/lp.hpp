#pragma once

#include "gromon/types.hpp"

namespace gromon {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Vector x;
  double objective = 0.0;
};

/// Dense two-phase simplex with Bland's rule for
///   minimize c^T x  subject to  A x <= b,  x >= 0.
/// Meant for small problems (tens of variables and constraints).
LpResult solve_lp(const Vector& c, const Matrix& a, const Vector& b);

}  // namespace gromon
