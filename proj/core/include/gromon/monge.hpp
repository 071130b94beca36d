#pragma once

#include "gromon/types.hpp"

#include <cstdint>
#include <functional>

namespace gromon {

/// Fiber-capacity bookkeeping for measure-preserving maps between two
/// weight vectors. When every weight is (to 1e-13) a ratio of small
/// integers the capacities are tracked as exact integers over a common
/// denominator; otherwise comparisons use tol_mass.
class WeightLedger {
 public:
  WeightLedger(const Vector& source, const Vector& target, double tol_mass = kTolMass);

  bool exact() const { return exact_; }
  std::size_t sources() const { return static_cast<std::size_t>(source_.size()); }
  std::size_t targets() const { return static_cast<std::size_t>(target_.size()); }

  // Exact mode: integer units over common_denominator().
  std::int64_t common_denominator() const { return denominator_; }
  const std::vector<std::int64_t>& source_units() const { return src_units_; }
  const std::vector<std::int64_t>& target_units() const { return tgt_units_; }

  const Vector& source() const { return source_; }
  const Vector& target() const { return target_; }
  double tol_mass() const { return tol_mass_; }

 private:
  Vector source_;
  Vector target_;
  double tol_mass_;
  bool exact_ = false;
  std::int64_t denominator_ = 0;
  std::vector<std::int64_t> src_units_;
  std::vector<std::int64_t> tgt_units_;
};

/// Visitor receives each map in lexicographic order of the assignment
/// vector; returning false stops the enumeration.
using MongeVisitor = std::function<bool(const MongeMap&)>;

/// Calls visit for every measure-preserving map source -> target. Returns the
/// number of maps visited. No maps (GM = inf) is a valid outcome.
std::uint64_t enumerate_monge_maps(const Vector& source_weights, const Vector& target_weights,
                                   const MongeVisitor& visit);

/// Collects all measure-preserving maps.
std::vector<MongeMap> all_monge_maps(const Vector& source_weights, const Vector& target_weights);

/// Number of measure-preserving maps, counting stops once it exceeds limit.
std::uint64_t count_monge_maps(const Vector& source_weights, const Vector& target_weights,
                               std::uint64_t limit);

}  // namespace gromon
