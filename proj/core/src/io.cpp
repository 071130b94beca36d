#include "gromon/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace gromon::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

const Json& field(const Json& j, const char* name, const char* context) {
  if (!j.is_object()) fail(std::string(context) + ": expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) fail(std::string(context) + ": missing field '" + name + "'");
  return *it;
}

double number_at(const Json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "Infinity") return kInfinity;
    if (s == "-inf" || s == "-Infinity") return -kInfinity;
  }
  fail(where + ": expected a number");
}

Vector vector_field(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected an array of numbers");
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    out(static_cast<Eigen::Index>(i)) = number_at(v[i], where + "[" + std::to_string(i) + "]");
  }
  return out;
}

Matrix matrix_field(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected an array of rows");
  const std::size_t rows = v.size();
  const std::size_t cols = rows > 0 && v[0].is_array() ? v[0].size() : 0;
  Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) fail(row_where + ": expected an array");
    if (v[i].size() != cols) {
      fail(row_where + ": has " + std::to_string(v[i].size()) + " entries, expected " + std::to_string(cols));
    }
    for (std::size_t k = 0; k < cols; ++k) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          number_at(v[i][k], row_where + "[" + std::to_string(k) + "]");
    }
  }
  return out;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number_or_inf(v(i)));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i).transpose()));
  return out;
}

std::size_t index_at(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(where + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

template <typename Fn>
auto with_context(const std::string& context, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const FormatError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw FormatError(context + ": " + e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source_name) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(source_name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path.string());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

Json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? Json("inf") : Json("-inf");
  return Json(v);
}

Json to_json(const MeasureNetwork& net) {
  Json out;
  out["weights"] = vector_json(net.weights());
  out["omega"] = matrix_json(net.omega());
  if (!net.labels().empty()) out["labels"] = net.labels();
  return out;
}

Json to_json(const Coupling& pi) { return Json{{"table", matrix_json(pi.table())}}; }

Json to_json(const MongeMap& phi) { return Json{{"assignment", phi.assignment()}}; }

Json to_json(const EuclideanCloud& cloud) {
  Json out;
  out["dim"] = cloud.dim();
  out["points"] = matrix_json(cloud.points().transpose());
  out["weights"] = vector_json(cloud.weights());
  return out;
}

Json to_json(const Isometry& t) {
  return Json{{"rotation", matrix_json(t.rotation)}, {"translation", vector_json(t.translation)}};
}

Json to_json(const Graph& g) {
  Json out;
  out["n"] = g.size();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  out["edges"] = std::move(edges);
  if (g.weights()) out["weights"] = *g.weights();
  return out;
}

Json to_json(const SolveReport& report) {
  Json out;
  out["value"] = number_or_inf(report.value);
  Json witness = Json::object();
  if (const auto* pi = std::get_if<Coupling>(&report.witness)) witness = to_json(*pi);
  if (const auto* phi = std::get_if<MongeMap>(&report.witness)) witness = to_json(*phi);
  out["witness"] = std::move(witness);
  out["method"] = to_string(report.method);
  out["iterations"] = report.iterations;
  out["converged"] = report.converged;
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

MeasureNetwork network_from_json(const Json& j) {
  const Vector w = vector_field(field(j, "weights", "network"), "weights");
  const Matrix om = matrix_field(field(j, "omega", "network"), "omega");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array()) fail("labels: expected an array");
    for (std::size_t i = 0; i < l.size(); ++i) {
      labels.push_back(l[i].is_string() ? l[i].get<std::string>() : l[i].dump());
    }
  }
  return with_context("network", [&] { return MeasureNetwork(w, om, labels); });
}

Coupling coupling_from_json(const Json& j, const Vector& source_weights, const Vector& target_weights) {
  const Matrix t = matrix_field(field(j, "table", "coupling"), "table");
  return with_context("coupling", [&] { return Coupling(t, source_weights, target_weights); });
}

MongeMap map_from_json(const Json& j) {
  const Json& a = field(j, "assignment", "map");
  if (!a.is_array()) fail("assignment: expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(index_at(a[i], "assignment[" + std::to_string(i) + "]"));
  return MongeMap(std::move(out));
}

EuclideanCloud cloud_from_json(const Json& j) {
  const std::size_t dim = index_at(field(j, "dim", "cloud"), "dim");
  const Matrix pts = matrix_field(field(j, "points", "cloud"), "points");
  if (pts.rows() > 0 && static_cast<std::size_t>(pts.cols()) != dim) {
    fail("points: rows have " + std::to_string(pts.cols()) + " coordinates, expected dim=" + std::to_string(dim));
  }
  const Matrix cols = pts.rows() > 0 ? Matrix(pts.transpose()) : Matrix(static_cast<Eigen::Index>(dim), 0);
  if (j.contains("weights")) {
    const Vector w = vector_field(j["weights"], "weights");
    return with_context("cloud", [&] { return EuclideanCloud(cols, w); });
  }
  return with_context("cloud", [&] { return EuclideanCloud::uniform(cols); });
}

Isometry isometry_from_json(const Json& j) {
  Isometry t{matrix_field(field(j, "rotation", "isometry"), "rotation"),
             vector_field(field(j, "translation", "isometry"), "translation")};
  if (t.rotation.rows() != t.rotation.cols() || t.rotation.rows() != t.translation.size()) {
    fail("isometry: rotation and translation sizes disagree");
  }
  if (t.orthogonality_error() > 1e-10) fail("isometry: rotation is not orthogonal");
  return t;
}

Graph graph_from_json(const Json& j) {
  const std::size_t n = index_at(field(j, "n", "graph"), "n");
  const Json& e = field(j, "edges", "graph");
  if (!e.is_array()) fail("edges: expected an array");
  std::vector<Graph::Edge> edges;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (!e[k].is_array() || e[k].size() != 2) fail(where + ": expected [i, j]");
    edges.emplace_back(index_at(e[k][0], where + "[0]"), index_at(e[k][1], where + "[1]"));
  }
  std::optional<std::vector<double>> weights;
  if (j.contains("weights") && !j["weights"].is_null()) {
    const Vector w = vector_field(j["weights"], "weights");
    weights = std::vector<double>(w.data(), w.data() + w.size());
  }
  return with_context("graph", [&] { return Graph(n, std::move(edges), std::move(weights)); });
}

Graph graph_from_edge_list(const std::string& text, const std::string& source_name) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<Graph::Edge> edges;
  std::vector<double> weights;
  bool any_weight = false, any_unweighted = false;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    const std::string where = source_name + ":" + std::to_string(line_no);
    if (tokens.size() < 2 || tokens.size() > 3) fail(where + ": expected 'i j [w]'");
    std::size_t ends[2];
    for (int k = 0; k < 2; ++k) {
      std::size_t pos = 0;
      long long v = -1;
      try {
        v = std::stoll(tokens[static_cast<std::size_t>(k)], &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tokens[static_cast<std::size_t>(k)].size() || v < 0) {
        fail(where + ": vertex '" + tokens[static_cast<std::size_t>(k)] + "' is not a nonnegative integer");
      }
      ends[k] = static_cast<std::size_t>(v);
    }
    double w = 1.0;
    if (tokens.size() == 3) {
      std::size_t pos = 0;
      try {
        w = std::stod(tokens[2], &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tokens[2].size()) fail(where + ": weight '" + tokens[2] + "' is not a number");
      any_weight = true;
    } else {
      any_unweighted = true;
    }
    edges.emplace_back(ends[0], ends[1]);
    weights.push_back(w);
    n = std::max({n, ends[0] + 1, ends[1] + 1});
  }
  if (any_weight && any_unweighted) fail(source_name + ": mix of weighted and unweighted edges");
  if (n == 0) fail(source_name + ": no edges");
  std::optional<std::vector<double>> opt;
  if (any_weight) opt = std::move(weights);
  return with_context(source_name, [&] { return Graph(n, std::move(edges), std::move(opt)); });
}

MeasureNetwork load_network(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return network_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

EuclideanCloud load_cloud(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return cloud_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Graph load_graph(const std::filesystem::path& path) {
  if (path.extension() == ".json") {
    const Json j = read_json_file(path);
    try {
      return graph_from_json(j);
    } catch (const FormatError& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return graph_from_edge_list(buffer.str(), path.string());
}

}  // namespace gromon::io
