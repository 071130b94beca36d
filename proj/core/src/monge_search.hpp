#pragma once

// Depth-first search over measure-preserving maps, shared by the map
// enumerator and the branch-and-bound Gromov-Monge solvers.

#include "gromon/monge.hpp"

#include <algorithm>
#include <cmath>

namespace gromon::detail {

template <typename Hooks>
class FiberSearch {
 public:
  FiberSearch(const WeightLedger& ledger, Hooks& hooks) : ledger_(ledger), hooks_(hooks) {
    const std::size_t n = ledger.sources();
    const std::size_t m = ledger.targets();
    assignment_.assign(n, 0);
    if (ledger.exact()) {
      rem_units_ = ledger.target_units();
      min_units_suffix_.assign(n + 1, std::numeric_limits<std::int64_t>::max());
      for (std::size_t i = n; i-- > 0;) {
        min_units_suffix_[i] = std::min(min_units_suffix_[i + 1], ledger.source_units()[i]);
      }
    } else {
      rem_.resize(m);
      for (std::size_t j = 0; j < m; ++j) rem_[j] = ledger.target()(static_cast<Eigen::Index>(j));
      min_w_suffix_.assign(n + 1, std::numeric_limits<double>::infinity());
      for (std::size_t i = n; i-- > 0;) {
        min_w_suffix_[i] = std::min(min_w_suffix_[i + 1], ledger.source()(static_cast<Eigen::Index>(i)));
      }
    }
  }

  /// Runs the search; returns false if a hook requested a stop.
  bool run() { return descend(0); }

  const std::vector<std::size_t>& assignment() const { return assignment_; }

 private:
  bool descend(std::size_t i) {
    const std::size_t n = ledger_.sources();
    if (i == n) {
      if (!complete()) return true;
      return hooks_.leaf(assignment_);
    }
    for (std::size_t j = 0; j < ledger_.targets(); ++j) {
      if (!take(i, j)) continue;
      assignment_[i] = j;
      bool keep_going = true;
      if (viable(i + 1) && hooks_.enter(assignment_, i, j)) {
        keep_going = descend(i + 1);
      }
      hooks_.leave(assignment_, i, j);
      give_back(i, j);
      if (!keep_going) return false;
    }
    return true;
  }

  bool take(std::size_t i, std::size_t j) {
    if (ledger_.exact()) {
      const auto u = ledger_.source_units()[i];
      if (rem_units_[j] < u) return false;
      rem_units_[j] -= u;
      return true;
    }
    const double w = ledger_.source()(static_cast<Eigen::Index>(i));
    if (rem_[j] - w < -ledger_.tol_mass()) return false;
    rem_[j] -= w;
    return true;
  }

  void give_back(std::size_t i, std::size_t j) {
    if (ledger_.exact()) {
      rem_units_[j] += ledger_.source_units()[i];
    } else {
      rem_[j] += ledger_.source()(static_cast<Eigen::Index>(i));
    }
  }

  // Every partially filled fiber must still fit the smallest unassigned weight.
  bool viable(std::size_t next) const {
    if (ledger_.exact()) {
      const auto smallest = min_units_suffix_[next];
      for (auto r : rem_units_) {
        if (r > 0 && r < smallest) return false;
      }
      return true;
    }
    const double tol = ledger_.tol_mass();
    const double smallest = min_w_suffix_[next];
    for (double r : rem_) {
      if (r > tol && r < smallest - tol) return false;
    }
    return true;
  }

  bool complete() const {
    if (ledger_.exact()) {
      return std::all_of(rem_units_.begin(), rem_units_.end(), [](auto r) { return r == 0; });
    }
    const double tol = ledger_.tol_mass();
    return std::all_of(rem_.begin(), rem_.end(), [tol](double r) { return std::abs(r) <= tol; });
  }

  const WeightLedger& ledger_;
  Hooks& hooks_;
  std::vector<std::size_t> assignment_;
  std::vector<std::int64_t> rem_units_;
  std::vector<std::int64_t> min_units_suffix_;
  std::vector<double> rem_;
  std::vector<double> min_w_suffix_;
};

}  // namespace gromon::detail
