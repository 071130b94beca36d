#include "gromon/distortion.hpp"
#include "gromon/monge.hpp"
#include "gromon/numeric.hpp"
#include "gromon/solvers.hpp"

#include "monge_search.hpp"

#include <algorithm>

namespace gromon {

std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::enumeration:
      return "enumeration";
    case SolveMethod::frank_wolfe:
      return "frank_wolfe";
    case SolveMethod::vertex_ascent:
      return "vertex_ascent";
    case SolveMethod::alternating:
      return "alternating";
  }
  return "unknown";
}

namespace {

// Branch and bound: the distortion restricted to assigned sources only grows
// as sources are added, so a partial sum >= the incumbent prunes the subtree.
class BoundHooks {
 public:
  BoundHooks(const MeasureNetwork& x, const MeasureNetwork& y, const Exponent& p)
      : x_(x), y_(y), infinite_(p.is_infinite()), q_(infinite_ ? 1.0 : p.value()),
        partial_(x.size() + 1, 0.0) {}

  bool enter(const std::vector<std::size_t>& a, std::size_t i, std::size_t j) {
    ++nodes_;
    const auto ii = static_cast<Eigen::Index>(i);
    const auto jj = static_cast<Eigen::Index>(j);
    const Matrix& wx = x_.omega();
    const Matrix& wy = y_.omega();
    double next;
    if (infinite_) {
      double sup = std::abs(wx(ii, ii) - wy(jj, jj));
      for (std::size_t k = 0; k < i; ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        const auto ak = static_cast<Eigen::Index>(a[k]);
        sup = std::max({sup, std::abs(wx(ii, kk) - wy(jj, ak)), std::abs(wx(kk, ii) - wy(ak, jj))});
      }
      next = std::max(partial_[i], sup);
    } else {
      const double wi = x_.weight(i);
      double inc = wi * wi * abs_pow(wx(ii, ii) - wy(jj, jj), q_);
      for (std::size_t k = 0; k < i; ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        const auto ak = static_cast<Eigen::Index>(a[k]);
        inc += wi * x_.weight(k) *
               (abs_pow(wx(ii, kk) - wy(jj, ak), q_) + abs_pow(wx(kk, ii) - wy(ak, jj), q_));
      }
      next = partial_[i] + inc;
    }
    partial_[i + 1] = next;
    return next < best_;
  }

  void leave(const std::vector<std::size_t>&, std::size_t, std::size_t) {}

  bool leaf(const std::vector<std::size_t>& a) {
    ++leaves_;
    const double total = partial_[a.size()];
    if (total < best_) {
      best_ = total;
      best_map_ = a;
    }
    return true;
  }

  bool found() const { return !best_map_.empty() || (x_.size() == 0); }
  const std::vector<std::size_t>& best_map() const { return best_map_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const MeasureNetwork& x_;
  const MeasureNetwork& y_;
  bool infinite_;
  double q_;
  std::vector<double> partial_;
  double best_ = kInfinity;
  std::vector<std::size_t> best_map_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace

SolveReport gm_exact(const MeasureNetwork& x, const MeasureNetwork& y, const Exponent& p,
                     std::uint64_t cap) {
  const auto count = count_monge_maps(x.weights(), y.weights(), cap);
  if (count > cap) {
    throw TooLarge("too large for exact enumeration: more than " + std::to_string(cap) +
                   " measure-preserving maps");
  }
  SolveReport report;
  report.method = SolveMethod::enumeration;
  report.converged = true;
  if (count == 0) {
    report.value = kInfinity;
    report.notes.push_back("no measure-preserving map");
    return report;
  }

  const WeightLedger ledger(x.weights(), y.weights());
  BoundHooks hooks(x, y, p);
  detail::FiberSearch<BoundHooks> search(ledger, hooks);
  search.run();
  MongeMap best(hooks.best_map());
  report.value = distortion_map_unchecked(x, y, best, p);
  report.witness = std::move(best);
  report.iterations = hooks.nodes();
  if (!ledger.exact()) report.notes.push_back("weights compared with tolerance");
  return report;
}

SolveReport gm_infinity(const MeasureNetwork& x, const MeasureNetwork& y, std::uint64_t cap) {
  return gm_exact(x, y, Exponent::infinity(), cap);
}

}  // namespace gromon
