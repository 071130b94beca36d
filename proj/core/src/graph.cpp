#include "gromon/graph.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>

namespace gromon {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::optional<std::vector<double>> weights)
    : n_(n), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (n_ == 0) throw InvalidInput("graph: needs at least one vertex");
  if (weights_ && weights_->size() != edges_.size()) {
    throw InvalidInput("graph: " + std::to_string(weights_->size()) + " weights for " +
                       std::to_string(edges_.size()) + " edges");
  }
  std::set<Edge> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= n_ || v >= n_) throw InvalidInput("graph: edge " + std::to_string(e) + " has an endpoint out of range");
    if (u == v) throw InvalidInput("graph: edge " + std::to_string(e) + " is a self-loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw InvalidInput("graph: duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
    }
    if (weights_ && !(std::isfinite((*weights_)[e]) && (*weights_)[e] >= 0.0)) {
      throw InvalidInput("graph: edge " + std::to_string(e) + " has a negative or non-finite weight");
    }
  }
}

Graph Graph::relabeled(const std::vector<std::size_t>& order) const {
  if (order.size() != n_) throw InvalidInput("graph: relabeling has wrong length");
  std::vector<std::size_t> position(n_, n_);
  for (std::size_t v = 0; v < n_; ++v) {
    if (order[v] >= n_ || position[order[v]] != n_) throw InvalidInput("graph: relabeling is not a permutation");
    position[order[v]] = v;
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& [u, v] : edges_) edges.emplace_back(position[u], position[v]);
  return Graph(n_, std::move(edges), weights_);
}

Matrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Matrix a = Matrix::Zero(n, n);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto u = static_cast<Eigen::Index>(g.edges()[e].first);
    const auto v = static_cast<Eigen::Index>(g.edges()[e].second);
    a(u, v) = a(v, u) = g.edge_weight(e);
  }
  return a;
}

MeasureNetwork adjacency_network(const Graph& g) { return MeasureNetwork::uniform(adjacency_matrix(g)); }

Matrix laplacian(const Graph& g) {
  const Matrix a = adjacency_matrix(g);
  Matrix l = -a;
  l.diagonal() += a.rowwise().sum();
  return l;
}

Matrix heat_kernel(const Graph& g, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidInput("heat kernel: t must be a positive number");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(laplacian(g));
  if (eig.info() != Eigen::Success) throw std::runtime_error("heat kernel: eigendecomposition failed");
  const Vector decay = (-t * eig.eigenvalues().cwiseMax(0.0)).array().exp();
  const Matrix& v = eig.eigenvectors();
  Matrix k = v * decay.asDiagonal() * v.transpose();
  return 0.5 * (k + k.transpose());
}

MeasureNetwork heat_kernel_network(const Graph& g, double t) { return MeasureNetwork::uniform(heat_kernel(g, t)); }

}  // namespace gromon
