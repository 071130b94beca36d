#pragma once

// Reference computations written without the library's solvers: plain
// loops, exhaustive enumeration and closed forms. Slow, used to check the
// library on small instances.

#include <gromon/types.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace gromon::oracle {

/// Quadruple-sum p-distortion of a coupling table; p = nullopt means sup
/// over cells with mass above 1e-12. Accumulates in long double.
double distortion(const Matrix& omega_x, const Matrix& omega_y, const Matrix& table, std::optional<double> p);

/// Table of the coupling induced by map[i] (row i has all its mass at map[i]).
Matrix map_table(const std::vector<std::size_t>& map, const Vector& source_weights, std::size_t target_size);

struct BruteForce {
  double value;  // +inf when no admissible map exists
  std::vector<std::size_t> argmin;
  std::size_t admissible = 0;
};

/// Minimum distortion over every function X -> Y (m^n of them) whose
/// pushforward matches the target weights within 1e-12.
BruteForce gm_over_all_functions(const MeasureNetwork& x, const MeasureNetwork& y, std::optional<double> p);

/// Minimum 2-distortion over all permutations of a same-size uniform pair.
BruteForce gw2_over_permutations(const MeasureNetwork& x, const MeasureNetwork& y);

/// (2n)^(-1/p): GM_p between the 2n- and n-point discrete spaces.
double simplex_pair_value(std::size_t n, double p);
/// (1 - 1/n)^(1/p): p-size of the n-point discrete space.
double simplex_size(std::size_t n, double p);
/// exp(-tL) for the single edge, entry (i, j).
double single_edge_heat(double t, bool diagonal);

}  // namespace gromon::oracle
