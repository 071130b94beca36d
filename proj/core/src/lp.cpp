#include "gromon/lp.hpp"

#include <cmath>
#include <vector>

namespace gromon {

namespace {

constexpr double kEps = 1e-11;

struct Tableau {
  Matrix t;                    // rows 0..m-1 constraints, last column rhs
  std::vector<Eigen::Index> basis;
  Eigen::Index cols;           // structural columns (excluding rhs)

  double rhs(Eigen::Index r) const { return t(r, cols); }

  void pivot(Eigen::Index row, Eigen::Index col, Vector& reduced, double& obj) {
    t.row(row) /= t(row, col);
    for (Eigen::Index r = 0; r < t.rows(); ++r) {
      if (r != row && t(r, col) != 0.0) t.row(r) -= t(r, col) * t.row(row);
    }
    const double rc = reduced(col);
    if (rc != 0.0) {
      reduced -= rc * t.row(row).head(cols).transpose();
      obj -= rc * rhs(row);
    }
    basis[static_cast<std::size_t>(row)] = col;
  }

  // Bland's rule simplex; obj tracks -(current objective value).
  LpStatus optimise(Vector& reduced, double& obj, const std::vector<char>& allowed) {
    for (std::size_t guard = 0; guard < 100000; ++guard) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (allowed[static_cast<std::size_t>(j)] && reduced(j) < -kEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::optimal;
      Eigen::Index leave = -1;
      double best_ratio = 0.0;
      for (Eigen::Index r = 0; r < t.rows(); ++r) {
        if (t(r, enter) > kEps) {
          const double ratio = rhs(r) / t(r, enter);
          if (leave < 0 || ratio < best_ratio - kEps ||
              (std::abs(ratio - best_ratio) <= kEps && basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leave)])) {
            leave = r;
            best_ratio = ratio;
          }
        }
      }
      if (leave < 0) return LpStatus::unbounded;
      pivot(leave, enter, reduced, obj);
    }
    throw std::runtime_error("lp: iteration limit exceeded");
  }
};

}  // namespace

LpResult solve_lp(const Vector& c, const Matrix& a, const Vector& b) {
  const Eigen::Index n = c.size();
  const Eigen::Index m = b.size();
  if (a.rows() != m || a.cols() != n) throw InvalidInput("lp: constraint shape mismatch");

  std::vector<Eigen::Index> needs_artificial;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (b(i) < 0.0) needs_artificial.push_back(i);
  }
  const auto k = static_cast<Eigen::Index>(needs_artificial.size());
  const Eigen::Index cols = n + m + k;

  Tableau tab{Matrix::Zero(m, cols + 1), std::vector<Eigen::Index>(static_cast<std::size_t>(m)), cols};
  Eigen::Index art = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double sign = b(i) < 0.0 ? -1.0 : 1.0;
    tab.t.row(i).head(n) = sign * a.row(i);
    tab.t(i, n + i) = sign;
    tab.t(i, cols) = sign * b(i);
    if (b(i) < 0.0) {
      tab.t(i, n + m + art) = 1.0;
      tab.basis[static_cast<std::size_t>(i)] = n + m + art;
      ++art;
    } else {
      tab.basis[static_cast<std::size_t>(i)] = n + i;
    }
  }

  std::vector<char> allowed(static_cast<std::size_t>(cols), 1);
  LpResult result;

  if (k > 0) {
    Vector reduced = Vector::Zero(cols);
    reduced.tail(k).setOnes();
    double obj = 0.0;
    for (Eigen::Index i : needs_artificial) {
      reduced -= tab.t.row(i).head(cols).transpose();
      obj -= tab.rhs(i);
    }
    tab.optimise(reduced, obj, allowed);
    if (-obj > 1e-9) return result;  // infeasible
    for (Eigen::Index r = 0; r < m; ++r) {
      if (tab.basis[static_cast<std::size_t>(r)] < n + m) continue;
      for (Eigen::Index j = 0; j < n + m; ++j) {
        if (std::abs(tab.t(r, j)) > kEps) {
          tab.pivot(r, j, reduced, obj);
          break;
        }
      }
    }
    for (Eigen::Index j = n + m; j < cols; ++j) allowed[static_cast<std::size_t>(j)] = 0;
  }

  Vector cost = Vector::Zero(cols);
  cost.head(n) = c;
  Vector reduced = cost;
  double obj = 0.0;
  for (Eigen::Index r = 0; r < m; ++r) {
    const double cb = cost(tab.basis[static_cast<std::size_t>(r)]);
    if (cb != 0.0) {
      reduced -= cb * tab.t.row(r).head(cols).transpose();
      obj -= cb * tab.rhs(r);
    }
  }
  result.status = tab.optimise(reduced, obj, allowed);
  if (result.status != LpStatus::optimal) return result;
  result.x = Vector::Zero(n);
  for (Eigen::Index r = 0; r < m; ++r) {
    const auto j = tab.basis[static_cast<std::size_t>(r)];
    if (j < n) result.x(j) = tab.rhs(r);
  }
  result.objective = c.dot(result.x);
  return result;
}

}  // namespace gromon
