#include "support.hpp"

#include <gromon/io.hpp>
#include <gromon/random.hpp>

#include <doctest.h>

#include <filesystem>
#include <string>

using namespace gromon;
using namespace gromon::testing;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("malformed JSON is located by line and column") {
  const std::string msg = message_of([] { io::parse_json("{\n  \"weights\": [1,\n}", "net.json"); });
  CHECK(msg.rfind("net.json:3:", 0) == 0);
  CHECK(msg.find("invalid JSON") != std::string::npos);
  CHECK_THROWS_AS(io::parse_json("[", "x"), io::FormatError);
}

TEST_CASE("field errors name the offending field") {
  CHECK(message_of([] { io::network_from_json(io::parse_json(R"({"weights": [1]})")); }).find("omega") !=
        std::string::npos);
  CHECK(message_of([] {
          io::network_from_json(io::parse_json(R"({"weights": [0.5, "a"], "omega": [[0,1],[1,0]]})"));
        }).find("weights[1]") != std::string::npos);
  CHECK_THROWS_AS(io::network_from_json(io::parse_json(R"({"weights": [0.5, 0.6], "omega": [[0,1],[1,0]]})")),
                  InvalidInput);
}

TEST_CASE("networks, couplings, maps and clouds round-trip") {
  Rng rng(3);
  const MeasureNetwork net(random_weights(4, rng), random_metric(4, rng));
  const MeasureNetwork back = io::network_from_json(io::parse_json(io::to_json(net).dump()));
  CHECK(back.weights() == net.weights());
  CHECK(back.omega() == net.omega());

  const Coupling pi = weak_coupling();
  CHECK(io::coupling_from_json(io::to_json(pi), pi.source_weights(), pi.target_weights()).table() == pi.table());
  CHECK(io::map_from_json(io::to_json(MongeMap({2, 0, 1}))) == MongeMap({2, 0, 1}));

  const EuclideanCloud c = random_cloud(5, 3, rng);
  const io::Json cj = io::to_json(c);
  CHECK(cj["points"].size() == 5);
  CHECK(cj["points"][0].size() == 3);
  CHECK(io::cloud_from_json(cj).points() == c.points());

  const Isometry t = random_isometry(2, rng);
  const Isometry tb = io::isometry_from_json(io::to_json(t));
  CHECK(tb.rotation == t.rotation);
  CHECK(tb.translation == t.translation);

  const Graph g = random_graph(6, 0.5, rng);
  CHECK(io::graph_from_json(io::to_json(g)).edges() == g.edges());
}

TEST_CASE("infinity travels as a string") {
  CHECK(io::number_or_inf(kInfinity) == "inf");
  CHECK(io::number_or_inf(0.5) == 0.5);
  SolveReport r;
  const io::Json j = io::to_json(r);
  CHECK(j["value"] == "inf");
}

TEST_CASE("edge lists") {
  const Graph g = io::graph_from_edge_list("# path\n0 1\n1 2\n\n", "g.txt");
  CHECK(g.size() == 3);
  CHECK(g.edges().size() == 2);
  CHECK_FALSE(g.weights().has_value());
  const Graph w = io::graph_from_edge_list("0 1 0.5\n2 1 2\n");
  REQUIRE(w.weights().has_value());
  CHECK((*w.weights())[1] == 2.0);
  CHECK(message_of([] { io::graph_from_edge_list("0 1\n1 x\n", "g.txt"); }).rfind("g.txt:2:", 0) == 0);
  CHECK_THROWS_AS(io::graph_from_edge_list("0 1 1\n1 2\n"), InvalidInput);
  CHECK_THROWS_AS(io::graph_from_edge_list("0 0\n"), InvalidInput);
}

TEST_CASE("load errors carry the path") {
  const std::string msg = message_of([] { io::load_network("/nonexistent/net.json"); });
  CHECK(msg.find("/nonexistent/net.json") != std::string::npos);
}
