#pragma once

#include <gromon/types.hpp>

#include <initializer_list>

namespace gromon::testing {

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

// The weakly isomorphic pair with two measure-preserving maps, both distorting.
inline MeasureNetwork weak_x() { return MeasureNetwork(vec({0.5, 0.25, 0.25}), mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})); }
inline MeasureNetwork weak_y() { return MeasureNetwork(vec({0.25, 0.25, 0.5}), mat({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}})); }
inline Coupling weak_coupling() {
  return Coupling(mat({{0.25, 0.25, 0}, {0, 0, 0.25}, {0, 0, 0.25}}), weak_x().weights(), weak_y().weights());
}

inline const Exponent p1 = Exponent::finite(1.0);
inline const Exponent p2 = Exponent::finite(2.0);
inline const Exponent pinf = Exponent::infinity();

}  // namespace gromon::testing
