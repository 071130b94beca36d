#include "support.hpp"

#include <gromon/cholesky.hpp>
#include <gromon/distortion.hpp>
#include <gromon/random.hpp>
#include <gromon/solvers.hpp>

#include <doctest.h>

#include <string>

using namespace gromon;
using namespace gromon::testing;

TEST_CASE("identical SPD networks are at distance zero") {
  Rng rng(11);
  const MeasureNetwork x = MeasureNetwork::uniform(random_spd(6, rng));
  const SolveReport r = gw_spd_vertex_ascent(x, x);
  CHECK(r.value <= 1e-9);
  CHECK(r.method == SolveMethod::vertex_ascent);
  CHECK(r.converged);
}

TEST_CASE("a relabelled copy is matched by its relabelling") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(40 + s);
    const std::size_t n = 2 + rng.below(6);
    const MeasureNetwork x = MeasureNetwork::uniform(random_spd(n, rng));
    const auto order = random_permutation(n, rng);
    const MeasureNetwork y = x.permuted(order);
    VertexAscentOptions opt;
    opt.seed = s;
    const SolveReport r = gw_spd_vertex_ascent(x, y, opt);
    CHECK(r.value <= 1e-9);
    const auto* phi = std::get_if<MongeMap>(&r.witness);
    REQUIRE(phi != nullptr);
    CHECK(distortion_map(x, y, *phi, p2) <= 1e-9);
  }
}

TEST_CASE("non-SPD input and shape errors") {
  const MeasureNetwork bad = MeasureNetwork::uniform(mat({{1, 2}, {2, 1}}));
  const MeasureNetwork good = MeasureNetwork::uniform(Matrix::Identity(2, 2));
  try {
    gw_spd_vertex_ascent(bad, good);
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).rfind("not SPD", 0) == 0);
  }
  CHECK_THROWS_AS(gw_spd_vertex_ascent(good, MeasureNetwork::uniform(Matrix::Identity(3, 3))), InvalidInput);
  const MeasureNetwork skewed(vec({0.25, 0.75}), Matrix::Identity(2, 2));
  CHECK_THROWS_AS(gw_spd_vertex_ascent(good, skewed), InvalidInput);
}

TEST_CASE("thread count does not change the result") {
  Rng rng(5);
  const MeasureNetwork x = MeasureNetwork::uniform(random_spd(7, rng));
  const MeasureNetwork y = MeasureNetwork::uniform(random_spd(7, rng));
  VertexAscentOptions one, four;
  one.seed = four.seed = 99;
  four.threads = 4;
  const SolveReport a = gw_spd_vertex_ascent(x, y, one), b = gw_spd_vertex_ascent(x, y, four);
  CHECK(a.value == b.value);
  CHECK(std::get<MongeMap>(a.witness) == std::get<MongeMap>(b.witness));
  CHECK(a.trace == b.trace);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("near-singular input is reported in the notes") {
  const MeasureNetwork x = MeasureNetwork::uniform(mat({{1, 1}, {1, 1 + 1e-12}}));
  const SolveReport r = gw_spd_vertex_ascent(x, x);
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes.front() == "near-singular SPD input");
}

TEST_CASE("objective matches the Cholesky form") {
  Rng rng(8);
  const Matrix a = random_spd(4, rng), b = random_spd(4, rng);
  const Matrix pi = Matrix::Identity(4, 4) / 4.0;
  const Matrix u = cholesky_upper(a).upper, v = cholesky_upper(b).upper;
  CHECK(spd_objective(a, b, pi) == doctest::Approx((u * pi * v.transpose()).squaredNorm()).epsilon(1e-12));
}
