#include "gromon/euclidean.hpp"

#include "gromon/assignment.hpp"
#include "gromon/numeric.hpp"
#include "gromon/random.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

namespace gromon {

EuclideanCloud::EuclideanCloud(Matrix points, Vector weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.rows() == 0) throw InvalidInput("cloud: dimension must be positive");
  if (points_.cols() != weights_.size()) throw InvalidInput("cloud: point count does not match weight count");
  if (!points_.allFinite()) throw InvalidInput("cloud: non-finite coordinate");
  validate_probability_vector(weights_, "cloud");
}

EuclideanCloud EuclideanCloud::uniform(Matrix points) {
  const auto n = points.cols();
  if (n == 0) throw InvalidInput("cloud: no points");
  return EuclideanCloud(std::move(points), Vector::Constant(n, 1.0 / static_cast<double>(n)));
}

Isometry Isometry::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return {Matrix::Identity(d, d), Vector::Zero(d)};
}

double Isometry::orthogonality_error() const {
  const auto d = rotation.rows();
  return (rotation.transpose() * rotation - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

EuclideanCloud transformed(const EuclideanCloud& cloud, const Isometry& t) {
  return EuclideanCloud(t.apply_all(cloud.points()), cloud.weights());
}

MeasureNetwork cloud_to_network(const EuclideanCloud& cloud, bool squared) {
  const auto n = static_cast<Eigen::Index>(cloud.size());
  Matrix om = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d2 = (cloud.points().col(i) - cloud.points().col(j)).squaredNorm();
      om(i, j) = om(j, i) = squared ? d2 : std::sqrt(d2);
    }
  }
  return MeasureNetwork(cloud.weights(), std::move(om));
}

Isometry procrustes_align(const EuclideanCloud& x, const EuclideanCloud& y, const MongeMap& phi,
                          bool proper_only) {
  if (x.dim() != y.dim()) throw InvalidInput("procrustes: dimension mismatch");
  require_measure_preserving(phi, x.weights(), y.weights());
  const auto d = static_cast<Eigen::Index>(x.dim());
  const auto n = static_cast<Eigen::Index>(x.size());

  Matrix matched(d, n);
  for (Eigen::Index i = 0; i < n; ++i) matched.col(i) = y.points().col(static_cast<Eigen::Index>(phi[static_cast<std::size_t>(i)]));
  const Vector cx = x.centroid();
  const Vector cy = matched * x.weights();
  // Cross-covariance sum_i w_i (y_phi(i) - cy)(x_i - cx)^T.
  const Matrix xs = x.points().colwise() - cx;
  const Matrix ys = matched.colwise() - cy;
  const Matrix h = ys * x.weights().asDiagonal() * xs.transpose();

  Matrix r = Matrix::Identity(d, d);
  if (h.cwiseAbs().maxCoeff() > 0.0) {
    Eigen::JacobiSVD<Matrix> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix u = svd.matrixU();
    const Matrix& v = svd.matrixV();
    if (proper_only && (u * v.transpose()).determinant() < 0.0) u.col(d - 1) *= -1.0;
    r = u * v.transpose();
  }
  return {r, cy - r * cx};
}

double matching_cost(const EuclideanCloud& x, const EuclideanCloud& y, const Isometry& t,
                     const MongeMap& phi, const Exponent& p) {
  const Matrix moved = t.apply_all(x.points());
  if (p.is_infinite()) {
    double sup = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sup = std::max(sup, (moved.col(static_cast<Eigen::Index>(i)) - y.point(phi[i])).norm());
    }
    return sup;
  }
  const double q = p.value();
  CompensatedSum total;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dist = (moved.col(static_cast<Eigen::Index>(i)) - y.point(phi[i])).norm();
    total += x.weights()(static_cast<Eigen::Index>(i)) * abs_pow(dist, q);
  }
  return root(total.value(), q);
}

namespace {

bool is_uniform(const Vector& w) {
  return (w.array() - 1.0 / static_cast<double>(w.size())).abs().maxCoeff() <= kTolMass;
}

}  // namespace

MongeMap best_map_for(const EuclideanCloud& x, const EuclideanCloud& y, const Isometry& t, const Exponent& p) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  if (m == 0 || n % m != 0) throw InvalidInput("matching: |X| must be a multiple of |Y|");
  const std::size_t k = n / m;
  const Matrix moved = t.apply_all(x.points());
  // Each target is replicated k times so fibers get exactly k sources.
  Matrix cost(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double dist = (moved.col(static_cast<Eigen::Index>(i)) - y.point(j)).norm();
      const double c = p.is_infinite() ? dist : abs_pow(dist, p.value());
      for (std::size_t r = 0; r < k; ++r) cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j * k + r)) = c;
    }
  }
  const auto cols = p.is_infinite() ? solve_bottleneck_assignment(cost) : solve_assignment_min(cost);
  std::vector<std::size_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = cols[i] / k;
  return MongeMap(std::move(a));
}

MisoResult miso_alternate(const EuclideanCloud& x, const EuclideanCloud& y, const Exponent& p,
                          Isometry t, MongeMap phi, std::size_t max_alternations, bool proper_only) {
  MisoResult out{SolveReport{}, t};
  SolveReport& rep = out.report;
  rep.method = SolveMethod::alternating;
  double current = matching_cost(x, y, t, phi, p);
  rep.trace.push_back(current);
  Isometry best_t = t;
  MongeMap best_phi = phi;
  double best = current;

  for (std::size_t step = 0; step < max_alternations; ++step) {
    rep.iterations = step + 1;
    const Isometry t_next = procrustes_align(x, y, phi, proper_only);
    const double after_t = matching_cost(x, y, t_next, phi, p);
    rep.trace.push_back(after_t);
    MongeMap phi_next = best_map_for(x, y, t_next, p);
    const double after_phi = matching_cost(x, y, t_next, phi_next, p);
    rep.trace.push_back(after_phi);
    const double candidate = std::min(after_t, after_phi);
    if (candidate < best) {
      best = candidate;
      best_t = t_next;
      best_phi = after_phi <= after_t ? phi_next : phi;
    }
    const bool stalled = phi_next == phi || !(after_phi < current - 1e-15 * (1.0 + current));
    t = t_next;
    phi = std::move(phi_next);
    current = after_phi;
    if (stalled) {
      rep.converged = true;
      break;
    }
  }
  rep.value = best;
  rep.witness = best_phi;
  out.transform = best_t;
  return out;
}

namespace {

Matrix principal_axes(const EuclideanCloud& c) {
  const Matrix centered = c.points().colwise() - c.centroid();
  const Matrix cov = centered * c.weights().asDiagonal() * centered.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(cov);
  return eig.eigenvectors();  // ascending eigenvalues
}

}  // namespace

MisoResult m_iso(const EuclideanCloud& x, const EuclideanCloud& y, const Exponent& p, const MisoOptions& options) {
  if (x.dim() != y.dim()) throw InvalidInput("m_iso: dimension mismatch");
  MisoResult infeasible{SolveReport{}, Isometry::identity(x.dim())};
  infeasible.report.method = SolveMethod::alternating;
  infeasible.report.converged = true;
  if (!is_uniform(x.weights()) || !is_uniform(y.weights())) {
    infeasible.report.notes.push_back("only uniform weights are supported");
    return infeasible;
  }
  if (x.size() % y.size() != 0) {
    infeasible.report.notes.push_back("no measure-preserving map");
    return infeasible;
  }

  const std::size_t dim = x.dim();
  const Vector cx = x.centroid();
  const Vector cy = y.centroid();
  const Matrix ax = principal_axes(x);
  const Matrix ay = principal_axes(y);
  const std::size_t sign_patterns = std::size_t{1} << std::min<std::size_t>(dim, 16);
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);

  // Restart 0: identity map after centroid alignment. Then principal-axis
  // alignments over all axis sign patterns, then Haar-random orthogonal maps.
  auto run = [&](std::size_t r) -> MisoResult {
    const auto d = static_cast<Eigen::Index>(dim);
    if (r == 0) {
      Isometry t{Matrix::Identity(d, d), cy - cx};
      std::vector<std::size_t> a(x.size());
      const std::size_t k = x.size() / y.size();
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = i / k;
      return miso_alternate(x, y, p, t, MongeMap(std::move(a)), options.max_alternations, options.proper_only);
    }
    Matrix rot;
    if (r <= sign_patterns) {
      Vector signs(d);
      for (Eigen::Index b = 0; b < d; ++b) signs(b) = ((r - 1) >> b) & 1U ? -1.0 : 1.0;
      rot = ay * signs.asDiagonal() * ax.transpose();
      if (options.proper_only && rot.determinant() < 0.0) {
        signs(d - 1) *= -1.0;
        rot = ay * signs.asDiagonal() * ax.transpose();
      }
    } else {
      Rng rng(derive_seed(options.seed, r));
      rot = random_orthogonal(dim, rng, options.proper_only);
    }
    Isometry t{rot, cy - rot * cx};
    MongeMap phi = best_map_for(x, y, t, p);
    return miso_alternate(x, y, p, t, std::move(phi), options.max_alternations, options.proper_only);
  };

  std::vector<std::optional<MisoResult>> results(restarts);
  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, restarts);
  if (threads == 1) {
    for (std::size_t r = 0; r < restarts; ++r) results[r] = run(r);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t r = t; r < restarts; r += threads) results[r] = run(r);
      });
    }
  }

  std::size_t best = 0;
  std::uint64_t iterations = 0;
  bool converged = true;
  for (std::size_t r = 0; r < restarts; ++r) {
    iterations += results[r]->report.iterations;
    converged = converged && results[r]->report.converged;
    if (results[r]->report.value < results[best]->report.value) best = r;
  }
  MisoResult out = std::move(*results[best]);
  out.report.iterations = iterations;
  out.report.converged = converged;
  if (!p.is_infinite() && p.value() != 2.0) {
    out.report.notes.push_back("rigid update uses the p=2 Procrustes surrogate");
  }
  return out;
}

}  // namespace gromon
