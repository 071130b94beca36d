#include "gromon/cholesky.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gromon {

CholeskyFactor cholesky_upper(const Matrix& a, double pivot_threshold, double tol_symmetry) {
  if (a.rows() != a.cols()) throw InvalidInput("not SPD: table is not square");
  const Eigen::Index n = a.rows();
  const double asym = n > 0 ? (a - a.transpose()).cwiseAbs().maxCoeff() : 0.0;
  if (asym > tol_symmetry) {
    std::ostringstream msg;
    msg << "not SPD: asymmetry " << asym;
    throw InvalidInput(msg.str());
  }

  CholeskyFactor f;
  f.upper = Matrix::Zero(n, n);
  f.min_pivot = n > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  Matrix& u = f.upper;
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= u(k, j) * u(k, j);
    if (!(d > 0.0)) {
      std::ostringstream msg;
      msg << "not SPD: pivot " << j << " is " << d;
      throw InvalidInput(msg.str());
    }
    if (d < pivot_threshold) f.near_singular = true;
    f.min_pivot = std::min(f.min_pivot, d);
    const double ujj = std::sqrt(d);
    u(j, j) = ujj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = 0.5 * (a(j, i) + a(i, j));
      for (Eigen::Index k = 0; k < j; ++k) s -= u(k, j) * u(k, i);
      u(j, i) = s / ujj;
    }
  }
  return f;
}

bool is_spd(const Matrix& a) {
  try {
    cholesky_upper(a);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

}  // namespace gromon
