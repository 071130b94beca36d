#include "support.hpp"

#include <gromon/lp.hpp>
#include <gromon/numeric.hpp>
#include <gromon/random.hpp>
#include <gromon/transport.hpp>

#include <doctest.h>

using namespace gromon;
using namespace gromon::testing;

namespace {

// The same transportation problem as a generic LP: equalities split into two inequalities.
double lp_transport_cost(const Matrix& cost, const Vector& a, const Vector& b) {
  const Eigen::Index n = cost.rows(), m = cost.cols();
  Matrix rows = Matrix::Zero(2 * (n + m), n * m);
  Vector rhs(2 * (n + m));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      rows(i, i * m + j) = 1.0;
      rows(n + i, i * m + j) = -1.0;
      rows(2 * n + j, i * m + j) = 1.0;
      rows(2 * n + m + j, i * m + j) = -1.0;
    }
    rhs(i) = a(i);
    rhs(n + i) = -a(i);
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    rhs(2 * n + j) = b(j);
    rhs(2 * n + m + j) = -b(j);
  }
  Vector c(n * m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) c(i * m + j) = cost(i, j);
  }
  const LpResult r = solve_lp(c, rows, rhs);
  REQUIRE(r.status == LpStatus::optimal);
  return r.objective;
}

}  // namespace

TEST_CASE("transport plan is feasible, dual-certified and matches a generic LP") {
  for (std::uint64_t s = 0; s < 80; ++s) {
    Rng rng(s);
    const std::size_t n = 1 + rng.below(5), m = 1 + rng.below(5);
    const Vector a = random_weights(n, rng), b = random_weights(m, rng);
    Matrix cost(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    for (Eigen::Index i = 0; i < cost.rows(); ++i) {
      // Integer costs on half the instances force degenerate ties.
      for (Eigen::Index j = 0; j < cost.cols(); ++j) cost(i, j) = s % 2 ? rng.uniform(-1, 1) : static_cast<double>(rng.below(3));
    }
    const TransportResult r = solve_transport(cost, a, b);
    CHECK((r.plan.rowwise().sum() - a).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((r.plan.colwise().sum().transpose() - b).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(r.plan.minCoeff() >= 0.0);
    for (Eigen::Index i = 0; i < cost.rows(); ++i) {
      for (Eigen::Index j = 0; j < cost.cols(); ++j) {
        const double reduced = cost(i, j) - r.row_potential(i) - r.col_potential(j);
        CHECK(reduced >= -1e-9);
        if (r.plan(i, j) > 1e-12) CHECK(std::abs(reduced) <= 1e-9);
      }
    }
    CHECK(r.cost == doctest::Approx(cost.cwiseProduct(r.plan).sum()).epsilon(1e-12));
    CHECK(r.cost == doctest::Approx(lp_transport_cost(cost, a, b)).epsilon(1e-9));
  }
}

TEST_CASE("transport on uniform square marginals yields a permutation-shaped vertex") {
  const Matrix cost = mat({{4, 1, 3}, {2, 0, 5}, {3, 2, 2}});
  const Vector u = Vector::Constant(3, 1.0 / 3.0);
  const TransportResult r = solve_transport(cost, u, u);
  CHECK(r.cost == doctest::Approx(5.0 / 3.0));
}

TEST_CASE("transport rejects unbalanced marginals") {
  CHECK_THROWS_AS(solve_transport(Matrix::Zero(2, 2), vec({0.5, 0.5}), vec({0.5, 0.6})), InvalidInput);
  CHECK_THROWS_AS(solve_transport(Matrix::Zero(2, 3), vec({0.5, 0.5}), vec({0.5, 0.5})), InvalidInput);
}
