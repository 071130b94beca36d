#include "support.hpp"

#include <gromon/embedding.hpp>

#include <doctest.h>

using namespace gromon;
using namespace gromon::testing;

TEST_CASE("discrete space against a point: closed form and numerical route") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Exponent& p : {p1, p2, Exponent::finite(3.0)}) {
      const SimplexPointEmbedding e = simplex_point_embedding_value(n, p);
      CHECK(e.closed_form == (n == 1 ? 0.0 : 0.5));
      CHECK(e.numerical == doctest::Approx(e.closed_form).epsilon(1e-6));
      CHECK(simplex_embedding_violation(e.alpha) <= 1e-9);
    }
  }
  CHECK(simplex_point_embedding_value(5, p2).numerical == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("admissibility violation") {
  CHECK(simplex_embedding_violation(vec({0.5, 0.5, 0.5})) == 0.0);
  CHECK(simplex_embedding_violation(vec({0.2, 0.2})) == doctest::Approx(0.6));
  CHECK(simplex_embedding_violation(vec({0.0, 2.0})) == doctest::Approx(1.0));
}

TEST_CASE("embedding bounds from the map distance") {
  CHECK(gm_em_lower(MeasureNetwork::simplex(4), MeasureNetwork::simplex(2), p1) == doctest::Approx(0.125));
  CHECK(gm_em_infinity(weak_x(), weak_y()) == doctest::Approx(0.5));
  CHECK(gm_em_infinity(MeasureNetwork::simplex(3), MeasureNetwork::simplex(2)) == kInfinity);
}
