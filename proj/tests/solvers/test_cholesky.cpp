#include "support.hpp"

#include <gromon/cholesky.hpp>
#include <gromon/random.hpp>

#include <doctest.h>

#include <string>

using namespace gromon;
using namespace gromon::testing;

TEST_CASE("cholesky factor reproduces random SPD tables") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(s);
    const Matrix a = random_spd(1 + rng.below(9), rng);
    const CholeskyFactor f = cholesky_upper(a);
    CHECK((f.upper.transpose() * f.upper - a).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + a.cwiseAbs().maxCoeff()));
    CHECK(f.upper.isUpperTriangular());
    CHECK(f.upper.diagonal().minCoeff() > 0.0);
    CHECK_FALSE(f.near_singular);
  }
}

TEST_CASE("non-SPD tables are rejected with a reason") {
  auto reason = [](const Matrix& a) {
    try {
      cholesky_upper(a);
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(reason(mat({{1, 2}, {2, 1}})).rfind("not SPD: pivot 1", 0) == 0);
  CHECK(reason(mat({{1, 0.5}, {0, 1}})).rfind("not SPD: asymmetry", 0) == 0);
  CHECK(reason(mat({{0, 0}, {0, 1}})).rfind("not SPD: pivot 0", 0) == 0);
  CHECK_FALSE(is_spd(mat({{1, 1}, {1, 1}})));
  CHECK(is_spd(Matrix::Identity(3, 3)));
}

TEST_CASE("tiny positive pivots are flagged but accepted") {
  const Matrix a = mat({{1, 1}, {1, 1 + 1e-12}});
  const CholeskyFactor f = cholesky_upper(a);
  CHECK(f.near_singular);
  CHECK(f.min_pivot < kCholeskyPivotThreshold);
}
