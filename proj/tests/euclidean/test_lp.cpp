#include "support.hpp"

#include <gromon/lp.hpp>

#include <doctest.h>

using namespace gromon;
using namespace gromon::testing;

TEST_CASE("textbook maximisation as a minimisation") {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36.
  const LpResult r = solve_lp(vec({-3, -5}), mat({{1, 0}, {0, 2}, {3, 2}}), vec({4, 12, 18}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(-36));
  CHECK(r.x(0) == doctest::Approx(2));
  CHECK(r.x(1) == doctest::Approx(6));
}

TEST_CASE("negative right-hand sides need phase one") {
  // min x + y with x + y >= 1, x - y <= 0.
  const LpResult r = solve_lp(vec({1, 1}), mat({{-1, -1}, {1, -1}}), vec({-1, 0}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(1));
}

TEST_CASE("infeasible and unbounded programs") {
  CHECK(solve_lp(vec({1}), mat({{1}, {-1}}), vec({1, -2})).status == LpStatus::infeasible);
  CHECK(solve_lp(vec({-1, 0}), mat({{0, 1}}), vec({1})).status == LpStatus::unbounded);
}

TEST_CASE("degenerate vertex does not cycle") {
  // A classic cycling example for the largest-coefficient rule.
  const Matrix a = mat({{0.5, -5.5, -2.5, 9}, {0.5, -1.5, -0.5, 1}, {1, 0, 0, 0}});
  const LpResult r = solve_lp(vec({-10, 57, 9, 24}), a, vec({0, 0, 1}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.objective == doctest::Approx(-1));
}
