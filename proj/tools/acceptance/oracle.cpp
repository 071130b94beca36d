#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace gromon::oracle {

double distortion(const Matrix& omega_x, const Matrix& omega_y, const Matrix& table, std::optional<double> p) {
  const Eigen::Index n = table.rows(), m = table.cols();
  long double acc = 0.0L;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < m; ++l) {
          const long double mismatch = std::fabs(static_cast<long double>(omega_x(i, k)) - omega_y(j, l));
          if (!p) {
            if (table(i, j) > 1e-12 && table(k, l) > 1e-12) acc = std::max(acc, mismatch);
          } else {
            acc += std::pow(mismatch, static_cast<long double>(*p)) * table(i, j) * table(k, l);
          }
        }
      }
    }
  }
  if (!p) return static_cast<double>(acc);
  return static_cast<double>(std::pow(acc, 1.0L / static_cast<long double>(*p)));
}

Matrix map_table(const std::vector<std::size_t>& map, const Vector& source_weights, std::size_t target_size) {
  Matrix t = Matrix::Zero(source_weights.size(), static_cast<Eigen::Index>(target_size));
  for (std::size_t i = 0; i < map.size(); ++i) {
    t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(map[i])) = source_weights(static_cast<Eigen::Index>(i));
  }
  return t;
}

BruteForce gm_over_all_functions(const MeasureNetwork& x, const MeasureNetwork& y, std::optional<double> p) {
  const std::size_t n = x.size(), m = y.size();
  BruteForce best{std::numeric_limits<double>::infinity(), {}, 0};
  std::vector<std::size_t> f(n, 0);
  while (true) {
    std::vector<double> push(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) push[f[i]] += x.weights()(static_cast<Eigen::Index>(i));
    bool ok = true;
    for (std::size_t j = 0; j < m; ++j) ok = ok && std::abs(push[j] - y.weights()(static_cast<Eigen::Index>(j))) <= 1e-12;
    if (ok) {
      ++best.admissible;
      const double d = distortion(x.omega(), y.omega(), map_table(f, x.weights(), m), p);
      if (d < best.value) {
        best.value = d;
        best.argmin = f;
      }
    }
    std::size_t k = 0;
    while (k < n && ++f[k] == m) f[k++] = 0;
    if (k == n) break;
  }
  return best;
}

BruteForce gw2_over_permutations(const MeasureNetwork& x, const MeasureNetwork& y) {
  const std::size_t n = x.size();
  BruteForce best{std::numeric_limits<double>::infinity(), {}, 0};
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const double w = 1.0 / static_cast<double>(n);
  do {
    ++best.admissible;
    // Double sum over source pairs; the permutation coupling has n cells.
    long double acc = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const long double d = static_cast<long double>(x.omega(i, k)) - y.omega(perm[i], perm[k]);
        acc += d * d;
      }
    }
    const double value = static_cast<double>(std::sqrt(acc * w * w));
    if (value < best.value) {
      best.value = value;
      best.argmin = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double simplex_pair_value(std::size_t n, double p) { return std::pow(2.0 * static_cast<double>(n), -1.0 / p); }

double simplex_size(std::size_t n, double p) { return std::pow(1.0 - 1.0 / static_cast<double>(n), 1.0 / p); }

double single_edge_heat(double t, bool diagonal) {
  const double e = std::exp(-2.0 * t);
  return diagonal ? 0.5 * (1.0 + e) : 0.5 * (1.0 - e);
}

}  // namespace gromon::oracle
