#include "gromon/monge.hpp"

#include "monge_search.hpp"

#include <cmath>
#include <numeric>
#include <optional>

namespace gromon {

namespace {

constexpr std::int64_t kMaxDenominator = 1'000'000;
constexpr std::int64_t kMaxCommonDenominator = 1'000'000'000'000LL;
constexpr double kRationalTol = 1e-13;

struct Ratio {
  std::int64_t num;
  std::int64_t den;
};

// Continued-fraction convergents of w until one is within kRationalTol.
std::optional<Ratio> small_ratio(double w) {
  if (!(w > 0.0) || w > 1.0) return std::nullopt;
  std::int64_t h_prev = 0, h = 1;  // numerators
  std::int64_t k_prev = 1, k = 0;  // denominators
  double x = w;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(x);
    if (a_real > static_cast<double>(kMaxDenominator)) break;
    const auto a = static_cast<std::int64_t>(a_real);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > kMaxDenominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    if (std::abs(w - static_cast<double>(h) / static_cast<double>(k)) <= kRationalTol) {
      return Ratio{h, k};
    }
    const double frac = x - a_real;
    if (frac <= 0.0) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace

WeightLedger::WeightLedger(const Vector& source, const Vector& target, double tol_mass)
    : source_(source), target_(target), tol_mass_(tol_mass) {
  std::vector<Ratio> ratios;
  ratios.reserve(static_cast<std::size_t>(source.size() + target.size()));
  for (const Vector* v : {&source, &target}) {
    for (Eigen::Index i = 0; i < v->size(); ++i) {
      auto r = small_ratio((*v)(i));
      if (!r) return;
      ratios.push_back(*r);
    }
  }
  std::int64_t lcm = 1;
  for (const auto& r : ratios) {
    lcm = std::lcm(lcm, r.den);
    if (lcm > kMaxCommonDenominator) return;
  }
  std::vector<std::int64_t> units;
  units.reserve(ratios.size());
  for (const auto& r : ratios) units.push_back(r.num * (lcm / r.den));
  const auto ns = static_cast<std::size_t>(source.size());
  const auto src_total = std::accumulate(units.begin(), units.begin() + static_cast<std::ptrdiff_t>(ns), std::int64_t{0});
  const auto tgt_total = std::accumulate(units.begin() + static_cast<std::ptrdiff_t>(ns), units.end(), std::int64_t{0});
  if (src_total != lcm || tgt_total != lcm) return;
  exact_ = true;
  denominator_ = lcm;
  src_units_.assign(units.begin(), units.begin() + static_cast<std::ptrdiff_t>(ns));
  tgt_units_.assign(units.begin() + static_cast<std::ptrdiff_t>(ns), units.end());
}

namespace {

struct VisitHooks {
  const MongeVisitor& visit;
  std::uint64_t count = 0;
  bool enter(const std::vector<std::size_t>&, std::size_t, std::size_t) { return true; }
  void leave(const std::vector<std::size_t>&, std::size_t, std::size_t) {}
  bool leaf(const std::vector<std::size_t>& a) {
    ++count;
    return visit(MongeMap(a));
  }
};

struct CountHooks {
  std::uint64_t limit;
  std::uint64_t count = 0;
  bool enter(const std::vector<std::size_t>&, std::size_t, std::size_t) { return true; }
  void leave(const std::vector<std::size_t>&, std::size_t, std::size_t) {}
  bool leaf(const std::vector<std::size_t>&) { return ++count <= limit; }
};

}  // namespace

std::uint64_t enumerate_monge_maps(const Vector& source_weights, const Vector& target_weights,
                                   const MongeVisitor& visit) {
  const WeightLedger ledger(source_weights, target_weights);
  VisitHooks hooks{visit};
  detail::FiberSearch<VisitHooks> search(ledger, hooks);
  search.run();
  return hooks.count;
}

std::vector<MongeMap> all_monge_maps(const Vector& source_weights, const Vector& target_weights) {
  std::vector<MongeMap> maps;
  enumerate_monge_maps(source_weights, target_weights, [&](const MongeMap& m) {
    maps.push_back(m);
    return true;
  });
  return maps;
}

std::uint64_t count_monge_maps(const Vector& source_weights, const Vector& target_weights,
                               std::uint64_t limit) {
  const WeightLedger ledger(source_weights, target_weights);
  CountHooks hooks{limit};
  detail::FiberSearch<CountHooks> search(ledger, hooks);
  search.run();
  return hooks.count;
}

}  // namespace gromon
