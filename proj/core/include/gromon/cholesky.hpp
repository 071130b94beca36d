#pragma once

#include "gromon/types.hpp"

namespace gromon {

inline constexpr double kCholeskyPivotThreshold = 1e-10;

struct CholeskyFactor {
  // Upper-triangular U with A = U^T U.
  Matrix upper;
  double min_pivot = 0.0;
  // Some squared pivot fell below the threshold but stayed positive.
  bool near_singular = false;
};

/// Cholesky factorisation A = U^T U of a symmetric positive definite table.
/// Throws InvalidInput("not SPD: ...") when A is not symmetric within
/// tol_symmetry or a pivot is not strictly positive.
CholeskyFactor cholesky_upper(const Matrix& a, double pivot_threshold = kCholeskyPivotThreshold,
                              double tol_symmetry = kTolMetric);

/// True when cholesky_upper succeeds.
bool is_spd(const Matrix& a);

}  // namespace gromon
