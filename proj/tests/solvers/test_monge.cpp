#include "support.hpp"

#include <gromon/distortion.hpp>
#include <gromon/monge.hpp>
#include <gromon/random.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace gromon;
using namespace gromon::testing;

namespace {

// Independent count: every function n -> m, kept when its pushforward matches.
std::size_t brute_count(const Vector& a, const Vector& b) {
  const std::size_t n = static_cast<std::size_t>(a.size()), m = static_cast<std::size_t>(b.size());
  std::vector<std::size_t> f(n, 0);
  std::size_t count = 0;
  while (true) {
    Vector push = Vector::Zero(b.size());
    for (std::size_t i = 0; i < n; ++i) push(static_cast<Eigen::Index>(f[i])) += a(static_cast<Eigen::Index>(i));
    if ((push - b).cwiseAbs().maxCoeff() <= 1e-12) ++count;
    std::size_t k = 0;
    while (k < n && ++f[k] == m) f[k++] = 0;
    if (k == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("uniform equal sizes give every bijection") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Vector u = Vector::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n));
    const auto maps = all_monge_maps(u, u);
    std::size_t factorial = 1;
    for (std::size_t k = 2; k <= n; ++k) factorial *= k;
    CHECK(maps.size() == factorial);
    for (const auto& phi : maps) {
      auto sorted = phi.assignment();
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::size_t> iota(n);
      std::iota(iota.begin(), iota.end(), std::size_t{0});
      CHECK(sorted == iota);
    }
  }
}

TEST_CASE("three uniform points cannot map onto two uniform points") {
  CHECK(all_monge_maps(Vector::Constant(3, 1.0 / 3.0), vec({0.5, 0.5})).empty());
  CHECK(count_monge_maps(Vector::Constant(3, 1.0 / 3.0), vec({0.5, 0.5}), 100) == 0);
}

TEST_CASE("the weakly isomorphic pair has exactly two maps, in lexicographic order") {
  const auto maps = all_monge_maps(weak_x().weights(), weak_y().weights());
  REQUIRE(maps.size() == 2);
  CHECK(maps[0] == MongeMap({2, 0, 1}));
  CHECK(maps[1] == MongeMap({2, 1, 0}));
}

TEST_CASE("enumeration order is lexicographic and stops on request") {
  const Vector a = Vector::Constant(4, 0.25), b = vec({0.5, 0.25, 0.25});
  const auto maps = all_monge_maps(a, b);
  CHECK(maps.size() == 12);
  for (std::size_t k = 1; k < maps.size(); ++k) CHECK(maps[k - 1].assignment() < maps[k].assignment());
  std::size_t seen = 0;
  enumerate_monge_maps(a, b, [&](const MongeMap&) { return ++seen < 5; });
  CHECK(seen == 5);
  CHECK(count_monge_maps(a, b, 3) > 3);
}

TEST_CASE("ledger uses exact integers for rational weights only") {
  const WeightLedger exact(vec({0.5, 0.25, 0.25}), vec({1.0 / 3.0, 2.0 / 3.0}));
  CHECK(exact.exact());
  CHECK(exact.common_denominator() == 12);
  CHECK(exact.sources() == 3);
  CHECK(exact.targets() == 2);
  const double r = 1.0 / std::sqrt(2.0);
  const WeightLedger loose(vec({r, 1 - r}), vec({1 - r, r}));
  CHECK_FALSE(loose.exact());
  CHECK(loose.sources() == 2);
  CHECK(all_monge_maps(vec({r, 1 - r}), vec({1 - r, r})).size() == 1);
}

TEST_CASE("map counts agree with exhaustive function enumeration") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng(s);
    const std::size_t n = 1 + rng.below(6), m = 1 + rng.below(std::min<std::size_t>(n, 4));
    // Random masses on a coarse grid so that measure-preserving maps exist often.
    std::vector<std::size_t> f(n);
    for (auto& v : f) v = rng.below(m);
    for (std::size_t j = 0; j < m; ++j) f[j % n] = j;
    Vector a(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = static_cast<double>(1 + rng.below(3));
    a /= a.sum();
    Vector b = Vector::Zero(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < n; ++i) b(static_cast<Eigen::Index>(f[i])) += a(static_cast<Eigen::Index>(i));
    const auto maps = all_monge_maps(a, b);
    CHECK(maps.size() == brute_count(a, b));
    for (const auto& phi : maps) CHECK(pushforward_error(phi, a, b) <= 1e-12);
  }
}
