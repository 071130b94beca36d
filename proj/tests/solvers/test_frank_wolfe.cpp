#include "support.hpp"

#include <gromon/distortion.hpp>
#include <gromon/random.hpp>
#include <gromon/solvers.hpp>

#include <doctest.h>

#include <cmath>

using namespace gromon;
using namespace gromon::testing;

TEST_CASE("one point against two points") {
  const SolveReport r = gw_frank_wolfe(MeasureNetwork::one_point(), MeasureNetwork::simplex(2));
  CHECK(r.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.method == SolveMethod::frank_wolfe);
  CHECK(r.converged);
}

TEST_CASE("diagonal start on a copy stays at zero") {
  Rng rng(7);
  const MeasureNetwork x = MeasureNetwork::uniform(random_metric(5, rng));
  const Coupling diag(Matrix::Identity(5, 5) / 5.0, x.weights(), x.weights());
  const SolveReport r = gw_frank_wolfe(x, x, diag);
  CHECK(r.value <= 1e-12);
}

TEST_CASE("explicit coupling of the weakly isomorphic pair is a zero") {
  const SolveReport r = gw_frank_wolfe(weak_x(), weak_y(), weak_coupling());
  CHECK(r.value <= 1e-12);
}

TEST_CASE("mismatched initial coupling is rejected") {
  const Coupling wrong = Coupling::product(Vector::Constant(2, 0.5), Vector::Constant(2, 0.5));
  CHECK_THROWS_AS(gw_frank_wolfe(MeasureNetwork::simplex(3), MeasureNetwork::simplex(2), wrong), InvalidInput);
}

TEST_CASE("trace never increases and the value is the witness distortion") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(300 + s);
    const std::size_t n = 2 + rng.below(5), m = 2 + rng.below(5);
    // Odd seeds use uniform equal-size marginals, the assignment oracle path.
    const bool uniform = s % 2 == 1;
    const std::size_t mm = uniform ? n : m;
    const MeasureNetwork x(uniform ? Vector::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n))
                                   : random_weights(n, rng),
                           random_metric(n, rng));
    const MeasureNetwork y(uniform ? Vector::Constant(static_cast<Eigen::Index>(mm), 1.0 / static_cast<double>(mm))
                                   : random_weights(mm, rng),
                           random_metric(mm, rng));
    const SolveReport r = gw_frank_wolfe(x, y);
    REQUIRE_FALSE(r.trace.empty());
    for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k] <= r.trace[k - 1] + 1e-12);
    const auto* pi = std::get_if<Coupling>(&r.witness);
    REQUIRE(pi != nullptr);
    CHECK(std::abs(r.value - distortion_p(x, y, *pi, p2)) <= 1e-10);
    CHECK(r.value <= std::sqrt(r.trace.front()) + 1e-12);
    CHECK((pi->table().rowwise().sum() - x.weights()).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK((pi->table().colwise().sum().transpose() - y.weights()).cwiseAbs().maxCoeff() <= 1e-9);
  }
}
