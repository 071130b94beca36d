#include "gromon/transport.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace gromon {

namespace {

struct BasisCell {
  Eigen::Index row;
  Eigen::Index col;
};

// Rows are tree nodes [0, n), columns are nodes [n, n + m).
class BasisTree {
 public:
  BasisTree(Eigen::Index rows, Eigen::Index cols) : rows_(rows), adj_(static_cast<std::size_t>(rows + cols)) {}

  void rebuild(const std::vector<BasisCell>& basis) {
    for (auto& a : adj_) a.clear();
    for (std::size_t e = 0; e < basis.size(); ++e) {
      adj_[static_cast<std::size_t>(basis[e].row)].push_back(e);
      adj_[static_cast<std::size_t>(rows_ + basis[e].col)].push_back(e);
    }
  }

  std::size_t other(const BasisCell& c, std::size_t node) const {
    const auto r = static_cast<std::size_t>(c.row);
    return node == r ? static_cast<std::size_t>(rows_ + c.col) : r;
  }

  // Basis edges on the tree path from `from` to `to`, ordered starting at `to`.
  std::vector<std::size_t> path(const std::vector<BasisCell>& basis, std::size_t from, std::size_t to) const {
    const std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent_edge(adj_.size(), none);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<std::size_t> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      if (node == to) break;
      for (std::size_t e : adj_[node]) {
        const std::size_t next = other(basis[e], node);
        if (seen[next]) continue;
        seen[next] = 1;
        parent_edge[next] = e;
        queue.push_back(next);
      }
    }
    if (!seen[to]) throw std::logic_error("transport: basis is not a spanning tree");
    std::vector<std::size_t> edges;
    for (std::size_t node = to; node != from;) {
      const std::size_t e = parent_edge[node];
      edges.push_back(e);
      node = other(basis[e], node);
    }
    return edges;
  }

  void potentials(const std::vector<BasisCell>& basis, const Matrix& cost, Vector& u, Vector& v) const {
    std::vector<char> seen(adj_.size(), 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    u.setZero();
    v.setZero();
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      for (std::size_t e : adj_[node]) {
        const auto& c = basis[e];
        const std::size_t next = other(c, node);
        if (seen[next]) continue;
        seen[next] = 1;
        if (next >= static_cast<std::size_t>(rows_)) {
          v(c.col) = cost(c.row, c.col) - u(c.row);
        } else {
          u(c.row) = cost(c.row, c.col) - v(c.col);
        }
        queue.push_back(next);
      }
    }
  }

 private:
  Eigen::Index rows_;
  std::vector<std::vector<std::size_t>> adj_;
};

}  // namespace

TransportResult solve_transport(const Matrix& cost, const Vector& supply, const Vector& demand) {
  const Eigen::Index n = supply.size();
  const Eigen::Index m = demand.size();
  if (cost.rows() != n || cost.cols() != m) throw InvalidInput("transport: cost shape mismatch");
  if (n == 0 || m == 0) throw InvalidInput("transport: empty marginals");
  if (supply.minCoeff() < 0.0 || demand.minCoeff() < 0.0) throw InvalidInput("transport: negative marginal");
  if (std::abs(supply.sum() - demand.sum()) > kTolMass) throw InvalidInput("transport: unbalanced marginals");
  if (!cost.allFinite()) throw InvalidInput("transport: non-finite cost");

  Matrix plan = Matrix::Zero(n, m);
  Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic> is_basic =
      Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, m);
  std::vector<BasisCell> basis;
  basis.reserve(static_cast<std::size_t>(n + m - 1));

  // North-west corner start: exactly n + m - 1 basic cells forming a tree.
  {
    Vector rs = supply, cs = demand;
    Eigen::Index i = 0, j = 0;
    while (true) {
      const double q = std::max(0.0, std::min(rs(i), cs(j)));
      plan(i, j) = q;
      is_basic(i, j) = 1;
      basis.push_back({i, j});
      rs(i) -= q;
      cs(j) -= q;
      if (i == n - 1 && j == m - 1) break;
      if (j == m - 1 || (i < n - 1 && rs(i) <= cs(j))) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  BasisTree tree(n, m);
  Vector u(n), v(m);
  const double tol = 1e-12 * (1.0 + cost.cwiseAbs().maxCoeff());
  const std::size_t max_pivots = static_cast<std::size_t>(200 * (n * m) + 1000);
  std::size_t pivots = 0;
  std::size_t degenerate_streak = 0;

  while (true) {
    tree.rebuild(basis);
    tree.potentials(basis, cost, u, v);

    // Dantzig's rule; Bland's rule (first eligible cell) during long degenerate runs.
    const bool bland = degenerate_streak > static_cast<std::size_t>(n + m);
    Eigen::Index ei = -1, ej = -1;
    double best = -tol;
    for (Eigen::Index i = 0; i < n && !(bland && ei >= 0); ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        if (is_basic(i, j)) continue;
        const double reduced = cost(i, j) - u(i) - v(j);
        if (reduced < best) {
          best = bland ? -tol : reduced;
          ei = i;
          ej = j;
          if (bland) break;
        }
      }
    }
    if (ei < 0) break;
    if (++pivots > max_pivots) throw std::runtime_error("transport: pivot limit exceeded");

    const auto edges = tree.path(basis, static_cast<std::size_t>(ei), static_cast<std::size_t>(n + ej));
    // edges[0] touches column ej and loses flow; signs alternate along the path.
    double theta = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < edges.size(); k += 2) {
      theta = std::min(theta, plan(basis[edges[k]].row, basis[edges[k]].col));
    }
    std::size_t leaving = edges[0];
    Eigen::Index leaving_key = std::numeric_limits<Eigen::Index>::max();
    for (std::size_t k = 0; k < edges.size(); k += 2) {
      const auto& c = basis[edges[k]];
      const Eigen::Index key = c.row * m + c.col;
      if (plan(c.row, c.col) == theta && key < leaving_key) {
        leaving_key = key;
        leaving = edges[k];
      }
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto& c = basis[edges[k]];
      if (k % 2 == 0) {
        plan(c.row, c.col) -= theta;
      } else {
        plan(c.row, c.col) += theta;
      }
    }
    plan(ei, ej) += theta;
    degenerate_streak = theta > 0.0 ? 0 : degenerate_streak + 1;

    const auto out = basis[leaving];
    plan(out.row, out.col) = 0.0;
    is_basic(out.row, out.col) = 0;
    basis[leaving] = {ei, ej};
    is_basic(ei, ej) = 1;
  }

  TransportResult result;
  result.cost = (cost.array() * plan.array()).sum();
  result.plan = std::move(plan);
  result.row_potential = u;
  result.col_potential = v;
  result.pivots = pivots;
  return result;
}

}  // namespace gromon
