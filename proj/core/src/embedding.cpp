#include "gromon/embedding.hpp"

#include "gromon/lp.hpp"
#include "gromon/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace gromon {

double gm_em_infinity(const MeasureNetwork& x, const MeasureNetwork& y, std::uint64_t cap) {
  const SolveReport r = gm_infinity(x, y, cap);
  return r.infeasible() ? kInfinity : 0.5 * r.value;
}

double gm_em_lower(const MeasureNetwork& x, const MeasureNetwork& y, const Exponent& p, std::uint64_t cap) {
  const SolveReport r = gm_exact(x, y, p, cap);
  return r.infeasible() ? kInfinity : 0.5 * r.value;
}

double simplex_embedding_violation(const Vector& alpha) {
  double worst = std::max(0.0, -alpha.minCoeff());
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    for (Eigen::Index j = i + 1; j < alpha.size(); ++j) {
      worst = std::max({worst, 1.0 - alpha(i) - alpha(j), std::abs(alpha(i) - alpha(j)) - 1.0});
    }
  }
  return worst;
}

namespace {

// Rows of A alpha <= b describing admissible embeddings within the unit box.
void embedding_constraints(std::size_t n, Matrix& a, Vector& b, bool with_positivity) {
  const auto nn = static_cast<Eigen::Index>(n);
  const Eigen::Index pairs = nn * (nn - 1) / 2;
  const Eigen::Index rows = 3 * pairs + nn + (with_positivity ? nn : 0);
  a = Matrix::Zero(rows, nn);
  b = Vector::Zero(rows);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < nn; ++i) {
    for (Eigen::Index j = i + 1; j < nn; ++j) {
      a(r, i) = -1.0, a(r, j) = -1.0, b(r) = -1.0, ++r;  // alpha_i + alpha_j >= 1
      a(r, i) = 1.0, a(r, j) = -1.0, b(r) = 1.0, ++r;    // alpha_i - alpha_j <= 1
      a(r, i) = -1.0, a(r, j) = 1.0, b(r) = 1.0, ++r;    // alpha_j - alpha_i <= 1
    }
  }
  for (Eigen::Index i = 0; i < nn; ++i) a(r, i) = 1.0, b(r) = 1.0, ++r;
  if (with_positivity) {
    for (Eigen::Index i = 0; i < nn; ++i) a(r, i) = -1.0, b(r) = 0.0, ++r;
  }
}

SimplexPointEmbedding by_lp(std::size_t n, bool sup_norm) {
  Matrix a;
  Vector b;
  embedding_constraints(n, a, b, false);
  const auto nn = static_cast<Eigen::Index>(n);
  SimplexPointEmbedding out;
  if (!sup_norm) {
    const LpResult lp = solve_lp(Vector::Constant(nn, 1.0 / static_cast<double>(n)), a, b);
    if (lp.status != LpStatus::optimal) throw std::runtime_error("embedding LP did not solve");
    out.alpha = lp.x;
    out.numerical = lp.objective;
    return out;
  }
  // minimise s subject to alpha_i <= s.
  Matrix ext = Matrix::Zero(a.rows() + nn, nn + 1);
  Vector bext = Vector::Zero(a.rows() + nn);
  ext.topLeftCorner(a.rows(), nn) = a;
  bext.head(a.rows()) = b;
  for (Eigen::Index i = 0; i < nn; ++i) {
    ext(a.rows() + i, i) = 1.0;
    ext(a.rows() + i, nn) = -1.0;
  }
  Vector c = Vector::Zero(nn + 1);
  c(nn) = 1.0;
  const LpResult lp = solve_lp(c, ext, bext);
  if (lp.status != LpStatus::optimal) throw std::runtime_error("embedding LP did not solve");
  out.alpha = lp.x.head(nn);
  out.numerical = lp.objective;
  return out;
}

// Log-barrier interior point for min (1/n) sum alpha_i^p over the admissible box.
SimplexPointEmbedding by_barrier(std::size_t n, double p) {
  Matrix a;
  Vector b;
  embedding_constraints(n, a, b, true);
  const auto nn = static_cast<Eigen::Index>(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  Vector alpha = Vector::Constant(nn, 0.75);  // strictly feasible

  auto g = [&](const Vector& v) {
    CompensatedSum s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(v(i), p);
    return inv_n * s.value();
  };
  auto barrier = [&](const Vector& v, double t) {
    const Vector slack = b - a * v;
    if (slack.minCoeff() <= 0.0) return kInfinity;
    return t * g(v) - slack.array().log().sum();
  };

  const double rows = static_cast<double>(a.rows());
  for (double t = 1.0; rows / t > 1e-13; t *= 8.0) {
    for (int newton = 0; newton < 200; ++newton) {
      const Vector slack = b - a * alpha;
      const Vector inv = slack.cwiseInverse();
      Vector grad(nn);
      Matrix hess = a.transpose() * inv.cwiseAbs2().asDiagonal() * a;
      for (Eigen::Index i = 0; i < nn; ++i) {
        grad(i) = t * inv_n * p * std::pow(alpha(i), p - 1.0);
        hess(i, i) += t * inv_n * p * (p - 1.0) * std::pow(alpha(i), p - 2.0);
      }
      grad += a.transpose() * inv;
      const Vector step = hess.ldlt().solve(-grad);
      const double decrement = -grad.dot(step);
      if (decrement / 2.0 <= 1e-14) break;
      double s = 1.0;
      const double f0 = barrier(alpha, t);
      while (barrier(alpha + s * step, t) > f0 - 0.25 * s * decrement) {
        s *= 0.5;
        if (s < 1e-20) break;
      }
      if (s < 1e-20) break;
      alpha += s * step;
    }
  }
  // The barrier stops short of boundary optima, and the p-th root magnifies
  // what is left. The cost is increasing in each coordinate, so lower each
  // one to its smallest admissible value given the others.
  for (int sweep = 0; sweep < 4; ++sweep) {
    for (Eigen::Index i = 0; i < nn; ++i) {
      double lo = 0.0;
      for (Eigen::Index j = 0; j < nn; ++j) {
        if (j != i) lo = std::max({lo, 1.0 - alpha(j), alpha(j) - 1.0});
      }
      alpha(i) = std::min(alpha(i), lo);
    }
  }
  SimplexPointEmbedding out;
  out.alpha = alpha;
  out.numerical = root(g(alpha), p);
  return out;
}

}  // namespace

SimplexPointEmbedding simplex_point_embedding_value(std::size_t n, const Exponent& p) {
  if (n == 0) throw InvalidInput("embedding: n must be at least 1");
  SimplexPointEmbedding out;
  if (p.is_infinite()) {
    out = by_lp(n, true);
  } else if (p.value() == 1.0) {
    out = by_lp(n, false);
  } else {
    out = by_barrier(n, p.value());
  }
  out.closed_form = n >= 2 ? 0.5 : 0.0;
  return out;
}

}  // namespace gromon
