#include "gromon/distortion.hpp"

#include "gromon/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace gromon {

namespace {

struct Cell {
  Eigen::Index i;
  Eigen::Index j;
  double mass;
};

std::vector<Cell> support_cells(const Matrix& table, double threshold) {
  std::vector<Cell> cells;
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    for (Eigen::Index j = 0; j < table.cols(); ++j) {
      if (table(i, j) > threshold) cells.push_back({i, j, table(i, j)});
    }
  }
  return cells;
}

}  // namespace

MetricFlag check_pseudometric(const Matrix& omega, double tol_metric) {
  const auto n = omega.rows();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(omega(i, i)));
    for (Eigen::Index j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(omega(i, j) - omega(j, i)));
      worst = std::max(worst, -omega(i, j));
    }
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        worst = std::max(worst, omega(i, j) - omega(i, k) - omega(k, j));
      }
    }
  }
  return {worst <= tol_metric, worst};
}

MetricFlag validate_network(const MeasureNetwork& net, double tol_metric) {
  MetricFlag flag = check_pseudometric(net.omega(), tol_metric);
  const auto n = static_cast<Eigen::Index>(net.size());
  for (Eigen::Index i = 0; i < n && flag.is_metric; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && !(net.omega(i, j) > tol_metric)) {
        flag.is_metric = false;
        break;
      }
    }
  }
  return flag;
}

double distortion_p(const MeasureNetwork& x, const MeasureNetwork& y, const Coupling& pi,
                    const Exponent& p, double eps_support) {
  if (pi.rows() != x.size() || pi.cols() != y.size()) {
    throw InvalidInput("distortion: coupling shape does not match the networks");
  }
  if ((pi.source_weights() - x.weights()).cwiseAbs().maxCoeff() > kTolMass ||
      (pi.target_weights() - y.weights()).cwiseAbs().maxCoeff() > kTolMass) {
    throw InvalidInput("distortion: coupling marginals do not match the network weights");
  }
  const Matrix& wx = x.omega();
  const Matrix& wy = y.omega();

  if (p.is_infinite()) {
    const auto cells = support_cells(pi.table(), eps_support);
    double sup = 0.0;
    for (const auto& a : cells) {
      for (const auto& b : cells) {
        sup = std::max(sup, std::abs(wx(a.i, b.i) - wy(a.j, b.j)));
      }
    }
    return sup;
  }

  const double q = p.value();
  const auto cells = support_cells(pi.table(), 0.0);
  CompensatedSum total;
  for (const auto& a : cells) {
    CompensatedSum inner;
    for (const auto& b : cells) {
      inner += abs_pow(wx(a.i, b.i) - wy(a.j, b.j), q) * b.mass;
    }
    total += inner.value() * a.mass;
  }
  return root(std::max(total.value(), 0.0), q);
}

double distortion_map_unchecked(const MeasureNetwork& x, const MeasureNetwork& y,
                                const MongeMap& phi, const Exponent& p) {
  const Matrix& wx = x.omega();
  const Matrix& wy = y.omega();
  const auto n = static_cast<Eigen::Index>(x.size());
  auto target = [&](Eigen::Index i) { return static_cast<Eigen::Index>(phi[static_cast<std::size_t>(i)]); };

  if (p.is_infinite()) {
    double sup = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < n; ++k) {
        sup = std::max(sup, std::abs(wx(i, k) - wy(target(i), target(k))));
      }
    }
    return sup;
  }
  const double q = p.value();
  CompensatedSum total;
  for (Eigen::Index i = 0; i < n; ++i) {
    CompensatedSum inner;
    for (Eigen::Index k = 0; k < n; ++k) {
      inner += abs_pow(wx(i, k) - wy(target(i), target(k)), q) * x.weight(static_cast<std::size_t>(k));
    }
    total += inner.value() * x.weight(static_cast<std::size_t>(i));
  }
  return root(std::max(total.value(), 0.0), q);
}

double distortion_map(const MeasureNetwork& x, const MeasureNetwork& y, const MongeMap& phi,
                      const Exponent& p) {
  require_measure_preserving(phi, x.weights(), y.weights());
  return distortion_map_unchecked(x, y, phi, p);
}

Coupling coupling_from_map(const MongeMap& phi, const Vector& source_weights,
                           const Vector& target_weights) {
  require_measure_preserving(phi, source_weights, target_weights);
  Matrix table = Matrix::Zero(source_weights.size(), target_weights.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    table(row, static_cast<Eigen::Index>(phi[i])) = source_weights(row);
  }
  return Coupling(std::move(table), source_weights, target_weights);
}

double size_p(const MeasureNetwork& net, const Exponent& p) {
  const Matrix& w = net.omega();
  if (p.is_infinite()) return w.cwiseAbs().maxCoeff();
  const double q = p.value();
  CompensatedSum total;
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index k = 0; k < w.cols(); ++k) {
      total += abs_pow(w(i, k), q) * net.weights()(i) * net.weights()(k);
    }
  }
  return root(std::max(total.value(), 0.0), q);
}

MeasureNetwork pullback_network(const MeasureNetwork& base, const MongeMap& rho,
                                const Vector& source_weights) {
  require_measure_preserving(rho, source_weights, base.weights());
  const auto n = static_cast<Eigen::Index>(rho.size());
  Matrix om(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      om(a, b) = base.omega(rho[static_cast<std::size_t>(a)], rho[static_cast<std::size_t>(b)]);
    }
  }
  return MeasureNetwork(source_weights, std::move(om));
}

}  // namespace gromon
