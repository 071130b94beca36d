#pragma once

#include "gromon/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gromon {

/// Undirected simple graph on vertices 0..n-1 with optional nonnegative
/// edge weights. Construction rejects self-loops, out-of-range endpoints and
/// duplicate edges.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph(std::size_t n, std::vector<Edge> edges, std::optional<std::vector<double>> weights = std::nullopt);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<std::vector<double>>& weights() const { return weights_; }
  double edge_weight(std::size_t e) const { return weights_ ? (*weights_)[e] : 1.0; }

  /// Vertex v of the result is vertex order[v] of this graph.
  Graph relabeled(const std::vector<std::size_t>& order) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::optional<std::vector<double>> weights_;
};

Matrix adjacency_matrix(const Graph& g);

/// Uniform weights, omega = (weighted) adjacency.
MeasureNetwork adjacency_network(const Graph& g);

/// L = D - A.
Matrix laplacian(const Graph& g);

/// exp(-tL) from a symmetric eigendecomposition of L; eigenvalues are clamped
/// at zero from below first. Symmetric positive definite for every t > 0.
Matrix heat_kernel(const Graph& g, double t);

/// Uniform weights, omega = exp(-tL). Throws InvalidInput when t <= 0.
MeasureNetwork heat_kernel_network(const Graph& g, double t);

}  // namespace gromon
