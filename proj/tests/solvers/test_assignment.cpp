#include "support.hpp"

#include <gromon/assignment.hpp>
#include <gromon/numeric.hpp>

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

using namespace gromon;
using namespace gromon::testing;

namespace {

// Every injective row -> column map, by recursion.
void injections(std::size_t rows, std::size_t cols, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> a;
  std::vector<bool> used(cols, false);
  std::function<void()> rec = [&] {
    if (a.size() == rows) {
      f(a);
      return;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (used[j]) continue;
      used[j] = true;
      a.push_back(j);
      rec();
      a.pop_back();
      used[j] = false;
    }
  };
  rec();
}

Matrix random_table(Rng& rng, Eigen::Index r, Eigen::Index c, bool integral) {
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = integral ? static_cast<double>(rng.below(4)) : rng.uniform(-5, 5);
  }
  return m;
}

bool injective(const std::vector<std::size_t>& a, std::size_t cols) {
  std::set<std::size_t> s(a.begin(), a.end());
  return s.size() == a.size() && (a.empty() || *s.rbegin() < cols);
}

}  // namespace

TEST_CASE("min and max assignment match exhaustive search") {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto r = static_cast<Eigen::Index>(1 + rng.below(5));
    const auto c = r + static_cast<Eigen::Index>(rng.below(3));
    const Matrix cost = random_table(rng, r, c, t % 2 == 0);
    double lo = kInfinity, hi = -kInfinity;
    injections(static_cast<std::size_t>(r), static_cast<std::size_t>(c), [&](const std::vector<std::size_t>& a) {
      lo = std::min(lo, assignment_cost(cost, a));
      hi = std::max(hi, assignment_cost(cost, a));
    });
    const auto amin = solve_assignment_min(cost);
    const auto amax = solve_assignment_max(cost);
    REQUIRE(injective(amin, static_cast<std::size_t>(c)));
    REQUIRE(injective(amax, static_cast<std::size_t>(c)));
    CHECK(assignment_cost(cost, amin) == doctest::Approx(lo).epsilon(1e-12));
    CHECK(assignment_cost(cost, amax) == doctest::Approx(hi).epsilon(1e-12));
  }
}

TEST_CASE("bottleneck assignment minimises the largest cost, then the sum") {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<Eigen::Index>(1 + rng.below(5));
    const Matrix cost = random_table(rng, n, n, t % 2 == 0);
    double best_max = kInfinity, best_sum = kInfinity;
    injections(static_cast<std::size_t>(n), static_cast<std::size_t>(n), [&](const std::vector<std::size_t>& a) {
      double mx = -kInfinity;
      for (std::size_t i = 0; i < a.size(); ++i) mx = std::max(mx, cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a[i])));
      const double sum = assignment_cost(cost, a);
      if (mx < best_max || (mx == best_max && sum < best_sum)) {
        best_max = mx;
        best_sum = sum;
      }
    });
    const auto a = solve_bottleneck_assignment(cost);
    double mx = -kInfinity;
    for (std::size_t i = 0; i < a.size(); ++i) mx = std::max(mx, cost(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a[i])));
    CHECK(mx == best_max);
    CHECK(assignment_cost(cost, a) == doctest::Approx(best_sum).epsilon(1e-12));
  }
}

TEST_CASE("assignment ties resolve the same way every time") {
  const Matrix flat = Matrix::Zero(4, 4);
  const auto a = solve_assignment_min(flat);
  CHECK(a == solve_assignment_min(flat));
  CHECK(injective(a, 4));
  CHECK(solve_assignment_min(mat({{1, 0}, {0, 1}})) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("assignment rejects more rows than columns") {
  CHECK_THROWS_AS(solve_assignment_min(Matrix::Zero(3, 2)), InvalidInput);
  CHECK(solve_assignment_min(Matrix::Zero(0, 0)).empty());
}
