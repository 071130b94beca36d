#include "gromon/assignment.hpp"

#include "gromon/numeric.hpp"

#include <algorithm>
#include <limits>

namespace gromon {

std::vector<std::size_t> solve_assignment_min(const Matrix& cost) {
  const auto n = static_cast<std::size_t>(cost.rows());
  const auto m = static_cast<std::size_t>(cost.cols());
  if (n > m) throw InvalidInput("assignment: more rows than columns");
  if (!cost.allFinite()) throw InvalidInput("assignment: cost table has non-finite entries");
  if (n == 0) return {};

  constexpr double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials; column 0 is the virtual start.
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> row_of(m + 1, 0), way(m + 1, 0);
  std::vector<double> minv(m + 1);
  std::vector<char> used(m + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(static_cast<Eigen::Index>(i0 - 1), static_cast<Eigen::Index>(j - 1)) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= m; ++j) {
    if (row_of[j] != 0) assignment[row_of[j] - 1] = j - 1;
  }
  return assignment;
}

std::vector<std::size_t> solve_assignment_max(const Matrix& profit) {
  if (profit.size() == 0) return solve_assignment_min(profit);
  // Shift keeps costs nonnegative; the argmin is unchanged.
  const Matrix cost = Matrix::Constant(profit.rows(), profit.cols(), profit.maxCoeff()) - profit;
  return solve_assignment_min(cost);
}

namespace {

// Kuhn's augmenting paths restricted to cells with cost <= threshold.
bool has_perfect_matching(const Matrix& cost, double threshold) {
  const auto n = static_cast<std::size_t>(cost.rows());
  const auto m = static_cast<std::size_t>(cost.cols());
  std::vector<std::ptrdiff_t> match_col(m, -1);
  std::vector<char> visited;
  auto augment = [&](auto&& self, std::size_t row) -> bool {
    for (std::size_t j = 0; j < m; ++j) {
      if (visited[j] || cost(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) > threshold) continue;
      visited[j] = 1;
      if (match_col[j] < 0 || self(self, static_cast<std::size_t>(match_col[j]))) {
        match_col[j] = static_cast<std::ptrdiff_t>(row);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    visited.assign(m, 0);
    if (!augment(augment, i)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> solve_bottleneck_assignment(const Matrix& cost) {
  if (cost.rows() > cost.cols()) throw InvalidInput("assignment: more rows than columns");
  if (cost.size() == 0) return {};
  std::vector<double> levels(cost.data(), cost.data() + cost.size());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (has_perfect_matching(cost, levels[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const double bottleneck = levels[lo];
  // Forbid cells above the bottleneck with a penalty larger than any feasible total.
  const double penalty = 1.0 + static_cast<double>(cost.rows()) * (cost.cwiseAbs().maxCoeff() + 1.0);
  Matrix restricted = cost;
  for (Eigen::Index i = 0; i < cost.rows(); ++i) {
    for (Eigen::Index j = 0; j < cost.cols(); ++j) {
      if (cost(i, j) > bottleneck) restricted(i, j) = penalty;
    }
  }
  return solve_assignment_min(restricted);
}

double assignment_cost(const Matrix& cost, const std::vector<std::size_t>& assignment) {
  CompensatedSum total;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    total += cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(assignment[i]));
  }
  return total.value();
}

}  // namespace gromon
