#include "support.hpp"

#include <gromon/distortion.hpp>
#include <gromon/random.hpp>
#include <gromon/solvers.hpp>

#include <doctest.h>

using namespace gromon;
using namespace gromon::testing;

TEST_CASE("splitting the weakly isomorphic pair") {
  const MassSplit s = mass_split_from_coupling(weak_x(), weak_y(), weak_coupling());
  CHECK(s.z.size() == 4);
  CHECK(s.rho == MongeMap({0, 0, 1, 2}));
  CHECK(s.phi == MongeMap({0, 1, 2, 2}));
  CHECK((s.z.weights() - Vector::Constant(4, 0.25)).cwiseAbs().maxCoeff() <= 1e-15);
  for (const Exponent& p : {p1, p2, pinf}) {
    CHECK(gm_over_split(weak_x(), weak_y(), weak_coupling(), p) <= 1e-12);
  }
  const Coupling back = coupling_from_split(s, weak_x().weights(), weak_y().weights());
  CHECK((back.table() - weak_coupling().table()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("split distortion equals coupling distortion") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(500 + s);
    const std::size_t n = 1 + rng.below(5), m = 1 + rng.below(5);
    const MeasureNetwork x(random_weights(n, rng), random_metric(n, rng));
    const MeasureNetwork y(random_weights(m, rng), random_metric(m, rng));
    const Coupling pi = random_coupling(x.weights(), y.weights(), rng);
    const MassSplit split = mass_split_from_coupling(x, y, pi);
    CHECK(split.z.size() == n * m);
    for (const Exponent& p : {p1, p2, Exponent::finite(3.0), pinf}) {
      const double via_split = distortion_map(split.z, y, split.phi, p);
      CHECK(via_split == doctest::Approx(distortion_p(x, y, pi, p)).epsilon(1e-10));
      CHECK(gm_over_split(x, y, pi, p) == doctest::Approx(via_split).epsilon(1e-12));
    }
    const Coupling back = coupling_from_split(split, x.weights(), y.weights());
    CHECK((back.table() - pi.table()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(pushforward_error(split.rho, split.z.weights(), x.weights()) <= 1e-12);
  }
}

TEST_CASE("cells at or below the support threshold are dropped") {
  const Vector a = vec({0.5, 0.5});
  const Coupling pi(mat({{0.5, 0}, {0, 0.5}}), a, a);
  const MeasureNetwork x = MeasureNetwork::simplex(2);
  const MassSplit s = mass_split_from_coupling(x, x, pi);
  CHECK(s.z.size() == 2);
  CHECK(s.phi == MongeMap({0, 1}));
}
