#include "oracle.hpp"
#include "support.hpp"

#include <gromon/distortion.hpp>
#include <gromon/random.hpp>

#include <doctest.h>

using namespace gromon;
using namespace gromon::testing;

namespace {

struct Instance {
  MeasureNetwork x;
  MeasureNetwork y;
  Coupling pi;
};

Instance random_instance(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = 1 + rng.below(6), m = 1 + rng.below(6);
  MeasureNetwork x(random_weights(n, rng), random_metric(n, rng));
  MeasureNetwork y(random_weights(m, rng), random_metric(m, rng));
  Coupling pi = random_coupling(x.weights(), y.weights(), rng);
  return {std::move(x), std::move(y), std::move(pi)};
}

Coupling relabel(const Coupling& pi, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix t(pi.table().rows(), pi.table().cols());
  Vector a(t.rows()), b(t.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    a(static_cast<Eigen::Index>(i)) = pi.source_weights()(static_cast<Eigen::Index>(rows[i]));
    for (std::size_t j = 0; j < cols.size(); ++j) t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = pi(rows[i], cols[j]);
  }
  for (std::size_t j = 0; j < cols.size(); ++j) b(static_cast<Eigen::Index>(j)) = pi.target_weights()(static_cast<Eigen::Index>(cols[j]));
  return Coupling(t, a, b);
}

}  // namespace

TEST_CASE("distortion agrees with the quadruple-sum oracle") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Instance in = random_instance(s);
    for (double p : {1.0, 2.0, 3.5}) {
      CHECK(distortion_p(in.x, in.y, in.pi, Exponent::finite(p)) ==
            doctest::Approx(oracle::distortion(in.x.omega(), in.y.omega(), in.pi.table(), p)).epsilon(1e-12));
    }
    CHECK(distortion_p(in.x, in.y, in.pi, pinf) ==
          doctest::Approx(oracle::distortion(in.x.omega(), in.y.omega(), in.pi.table(), std::nullopt)).epsilon(1e-14));
  }
}

TEST_CASE("distortion is invariant under relabeling both spaces") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Instance in = random_instance(100 + s);
    Rng rng(s);
    const auto rows = random_permutation(in.x.size(), rng);
    const auto cols = random_permutation(in.y.size(), rng);
    const Coupling moved = relabel(in.pi, rows, cols);
    for (const Exponent& p : {p1, p2, pinf}) {
      CHECK(distortion_p(in.x.permuted(rows), in.y.permuted(cols), moved, p) ==
            doctest::Approx(distortion_p(in.x, in.y, in.pi, p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("map distortion equals the distortion of the induced coupling") {
  for (std::uint64_t s = 0; s < 80; ++s) {
    Rng rng(200 + s);
    const std::size_t m = 1 + rng.below(4);
    const MeasureNetwork y(random_weights(m, rng), random_metric(m, rng));
    // Split every target atom into one or two source atoms.
    std::vector<double> w;
    std::vector<std::size_t> assignment;
    for (std::size_t j = 0; j < m; ++j) {
      const double wj = y.weight(j);
      if (rng.below(2) == 0) {
        w.push_back(wj);
        assignment.push_back(j);
      } else {
        w.push_back(0.5 * wj);
        w.push_back(wj - 0.5 * wj);
        assignment.insert(assignment.end(), {j, j});
      }
    }
    Vector wx(static_cast<Eigen::Index>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) wx(static_cast<Eigen::Index>(i)) = w[i];
    const MeasureNetwork x(wx, random_metric(w.size(), rng));
    const MongeMap phi(assignment);
    const Coupling pi = coupling_from_map(phi, x.weights(), y.weights());
    for (const Exponent& p : {p1, p2, Exponent::finite(3.0), pinf}) {
      CHECK(std::abs(distortion_map(x, y, phi, p) - distortion_p(x, y, pi, p)) <= 1e-12);
    }
  }
}

TEST_CASE("distortion is nondecreasing in p") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Instance in = random_instance(300 + s);
    double previous = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 5.0}) {
      const double d = distortion_p(in.x, in.y, in.pi, Exponent::finite(p));
      CHECK(d >= previous - 1e-12);
      previous = d;
    }
    CHECK(distortion_p(in.x, in.y, in.pi, pinf) >= previous - 1e-12);
  }
}

TEST_CASE("p-size is the distortion of the map to a point") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(400 + s);
    const std::size_t n = 1 + rng.below(7);
    const MeasureNetwork x(random_weights(n, rng), random_metric(n, rng));
    const MongeMap collapse(std::vector<std::size_t>(n, 0));
    for (const Exponent& p : {p1, p2, pinf}) {
      CHECK(size_p(x, p) == doctest::Approx(distortion_map(x, MeasureNetwork::one_point(), collapse, p)).epsilon(1e-14));
    }
  }
}

TEST_CASE("pullback of a metric is a pseudometric") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(500 + s);
    const std::size_t n = 1 + rng.below(6);
    const MeasureNetwork x(random_weights(n, rng), random_metric(n, rng));
    REQUIRE(validate_network(x).is_metric);
    // Every point of x gets one or two preimages.
    std::vector<std::size_t> rho;
    std::vector<double> w;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t copies = 1 + rng.below(2);
      for (std::size_t c = 0; c < copies; ++c) {
        rho.push_back(i);
        w.push_back(x.weight(i) / static_cast<double>(copies));
      }
    }
    Vector wz(static_cast<Eigen::Index>(w.size()));
    for (std::size_t k = 0; k < w.size(); ++k) wz(static_cast<Eigen::Index>(k)) = w[k];
    const MeasureNetwork z = pullback_network(x, MongeMap(rho), wz);
    const MetricFlag flag = check_pseudometric(z.omega(), 1e-12);
    CHECK(flag.is_metric);
    CHECK(flag.max_violation <= 1e-12);
  }
}
