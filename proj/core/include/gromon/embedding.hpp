#pragma once

#include "gromon/solvers.hpp"
#include "gromon/types.hpp"

namespace gromon {

/// GM^em_inf(X, Y) = GM_inf(X, Y) / 2 (exact). Infinity propagates.
double gm_em_infinity(const MeasureNetwork& x, const MeasureNetwork& y,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// GM_p(X, Y) / 2, a certified lower bound on GM^em_p(X, Y).
double gm_em_lower(const MeasureNetwork& x, const MeasureNetwork& y, const Exponent& p,
                   std::uint64_t cap = kDefaultEnumerationCap);

struct SimplexPointEmbedding {
  double closed_form = 0.0;
  double numerical = 0.0;
  /// Minimiser found by the numerical route (distances from the point to each vertex).
  Vector alpha;
};

/// GM^em_p between the n-point discrete metric space and a point.
///
/// An embedding is a choice of distances alpha_i from the extra point to
/// vertex i; it is admissible iff |alpha_i - alpha_j| <= 1 <= alpha_i + alpha_j
/// for i != j, and its cost is (sum_i alpha_i^p / n)^(1/p). Returns the
/// closed form (1/2 for n >= 2, 0 for n = 1) alongside a numerical minimum:
/// a simplex LP at p = 1 and a log-barrier Newton method for p > 1, both over
/// the admissible set intersected with the box alpha <= 1.
SimplexPointEmbedding simplex_point_embedding_value(std::size_t n, const Exponent& p);

/// Largest violation of the admissibility constraints above.
double simplex_embedding_violation(const Vector& alpha);

}  // namespace gromon
