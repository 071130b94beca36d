#pragma once

#include "gromon/solvers.hpp"
#include "gromon/types.hpp"

#include <cstdint>

namespace gromon {

/// Weighted point cloud in R^dim; points are stored one per column.
class EuclideanCloud {
 public:
  EuclideanCloud(Matrix points, Vector weights);

  static EuclideanCloud uniform(Matrix points);

  std::size_t dim() const { return static_cast<std::size_t>(points_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(points_.cols()); }
  const Matrix& points() const { return points_; }
  Eigen::Ref<const Vector> point(std::size_t i) const { return points_.col(static_cast<Eigen::Index>(i)); }
  const Vector& weights() const { return weights_; }
  Vector centroid() const { return points_ * weights_; }

 private:
  Matrix points_;
  Vector weights_;
};

/// x -> rotation * x + translation, rotation orthogonal (det may be -1).
struct Isometry {
  Matrix rotation;
  Vector translation;

  static Isometry identity(std::size_t dim);
  Vector apply(const Eigen::Ref<const Vector>& x) const { return rotation * x + translation; }
  Matrix apply_all(const Matrix& points) const {
    return (rotation * points).colwise() + translation;
  }
  /// max |R^T R - I|.
  double orthogonality_error() const;
};

EuclideanCloud transformed(const EuclideanCloud& cloud, const Isometry& t);

/// omega(i, j) = |x_i - x_j|, or its square.
MeasureNetwork cloud_to_network(const EuclideanCloud& cloud, bool squared = false);

/// Weighted least-squares rigid fit of x onto y along phi:
/// argmin_T sum_i w_i |T(x_i) - y_phi(i)|^2. Reflections are allowed unless
/// proper_only is set. Zero cross-covariance yields the pure translation
/// between centroids.
Isometry procrustes_align(const EuclideanCloud& x, const EuclideanCloud& y, const MongeMap& phi,
                          bool proper_only = false);

/// (sum_i w_i |T(x_i) - y_phi(i)|^p)^(1/p), or the max for p = inf.
double matching_cost(const EuclideanCloud& x, const EuclideanCloud& y, const Isometry& t,
                     const MongeMap& phi, const Exponent& p);

struct MisoOptions {
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  std::size_t max_alternations = 100;
  std::size_t threads = 1;
  bool proper_only = false;  // restrict to SE(n)
};

struct MisoResult {
  SolveReport report;  // witness: MongeMap; trace: objective of the winning restart
  Isometry transform;
};

/// Upper bound on the isometry-invariant Monge p-distance by alternating an
/// optimal matching for fixed T with a Procrustes update of T for fixed phi.
/// For p != 2 the Procrustes step is a surrogate; the reported value is
/// always the true p-cost of the returned (T, phi).
/// Supports uniform weights with |X| a multiple of |Y|; other weightings
/// report infinity with a note.
MisoResult m_iso(const EuclideanCloud& x, const EuclideanCloud& y, const Exponent& p,
                 const MisoOptions& options = {});

/// One alternating run from (t, phi); trace holds the objective after every
/// half-step. Exposed for testing monotonicity.
MisoResult miso_alternate(const EuclideanCloud& x, const EuclideanCloud& y, const Exponent& p,
                          Isometry t, MongeMap phi, std::size_t max_alternations, bool proper_only = false);

/// Optimal map for a fixed isometry (assignment, or bottleneck assignment at p = inf).
MongeMap best_map_for(const EuclideanCloud& x, const EuclideanCloud& y, const Isometry& t, const Exponent& p);

}  // namespace gromon
