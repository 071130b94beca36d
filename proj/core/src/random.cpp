#include "gromon/random.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <limits>

namespace gromon {

namespace {

Matrix gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Matrix g(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = rng.normal();
  }
  return g;
}

}  // namespace

Matrix random_spd(std::size_t n, Rng& rng) {
  const auto nn = static_cast<Eigen::Index>(n);
  const Matrix a = gaussian(nn, nn, rng);
  Matrix s = a.transpose() * a;
  s.diagonal().array() += static_cast<double>(n) * 1e-3;
  return 0.5 * (s + s.transpose());
}

Matrix random_metric(std::size_t n, Rng& rng) {
  const auto nn = static_cast<Eigen::Index>(n);
  const double inf = std::numeric_limits<double>::infinity();
  Matrix d = Matrix::Constant(nn, nn, inf);
  d.diagonal().setZero();
  auto weight = [&] { return 1.5 - rng.uniform(); };  // (0.5, 1.5]
  const auto order = random_permutation(n, rng);
  for (std::size_t k = 1; k < n; ++k) {
    const auto u = static_cast<Eigen::Index>(order[k]);
    const auto v = static_cast<Eigen::Index>(order[rng.below(k)]);
    d(u, v) = d(v, u) = weight();
  }
  for (Eigen::Index i = 0; i < nn; ++i) {
    for (Eigen::Index j = i + 1; j < nn; ++j) {
      if (rng.uniform() < 0.5) {
        const double w = weight();
        if (w < d(i, j)) d(i, j) = d(j, i) = w;
      }
    }
  }
  for (Eigen::Index k = 0; k < nn; ++k) {
    for (Eigen::Index i = 0; i < nn; ++i) {
      for (Eigen::Index j = 0; j < nn; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
    }
  }
  return d;
}

Vector random_weights(std::size_t n, Rng& rng) {
  Vector w(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = 1.0 - 0.9 * rng.uniform();
  return w / w.sum();
}

EuclideanCloud random_cloud(std::size_t n, std::size_t dim, Rng& rng) {
  return EuclideanCloud::uniform(gaussian(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(n), rng));
}

Graph random_graph(std::size_t n, double edge_probability, Rng& rng) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw InvalidInput("random graph: edge probability must lie in [0, 1]");
  }
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.uniform() < edge_probability) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

Coupling random_coupling(const Vector& source_weights, const Vector& target_weights, Rng& rng) {
  const Eigen::Index n = source_weights.size(), m = target_weights.size();
  Matrix k(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) k(i, j) = 0.05 + rng.uniform();
  }
  for (int it = 0; it < 10000; ++it) {
    k.array().colwise() *= (source_weights.array() / k.rowwise().sum().array());
    k.array().rowwise() *= (target_weights.array() / k.colwise().sum().transpose().array()).transpose();
    const double err = (k.rowwise().sum() - source_weights).cwiseAbs().maxCoeff();
    if (err <= 1e-13) break;
  }
  return Coupling(k, source_weights, target_weights);
}

Matrix random_orthogonal(std::size_t dim, Rng& rng, bool proper_only) {
  const auto d = static_cast<Eigen::Index>(dim);
  const Matrix g = gaussian(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  }
  if (proper_only && q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

Isometry random_isometry(std::size_t dim, Rng& rng) {
  Matrix rot = random_orthogonal(dim, rng);
  return Isometry{std::move(rot), gaussian(static_cast<Eigen::Index>(dim), 1, rng).col(0)};
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(out[i - 1], out[rng.below(i)]);
  return out;
}

}  // namespace gromon
