#pragma once

// JSON and text formats for networks, couplings, maps, clouds, isometries,
// graphs and solver reports.
//
//   network   {"weights": [...], "omega": [[...], ...], "labels": [...]?}
//   coupling  {"table": [[...], ...]}
//   map       {"assignment": [...]}
//   cloud     {"dim": d, "points": [[...], ...], "weights": [...]?}
//   isometry  {"rotation": [[...], ...], "translation": [...]}
//   graph     {"n": n, "edges": [[i, j], ...], "weights": [...]?}
//             or text lines "i j [w]" ('#' starts a comment)
//   report    {"value": v | "inf", "witness": {...}, "method": "...",
//              "iterations": k, "converged": bool}

#include "gromon/euclidean.hpp"
#include "gromon/graph.hpp"
#include "gromon/solvers.hpp"
#include "gromon/types.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace gromon::io {

using Json = nlohmann::ordered_json;

/// Malformed input file; the message names the file and the offending
/// line or field.
class FormatError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text, const std::string& source_name = "<input>");
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Finite numbers are written as numbers, infinity as the string "inf".
Json number_or_inf(double v);

Json to_json(const MeasureNetwork& net);
Json to_json(const Coupling& pi);
Json to_json(const MongeMap& phi);
Json to_json(const EuclideanCloud& cloud);
Json to_json(const Isometry& t);
Json to_json(const Graph& g);
Json to_json(const SolveReport& report);

MeasureNetwork network_from_json(const Json& j);
Coupling coupling_from_json(const Json& j, const Vector& source_weights, const Vector& target_weights);
MongeMap map_from_json(const Json& j);
EuclideanCloud cloud_from_json(const Json& j);
Isometry isometry_from_json(const Json& j);
Graph graph_from_json(const Json& j);
Graph graph_from_edge_list(const std::string& text, const std::string& source_name = "<input>");

MeasureNetwork load_network(const std::filesystem::path& path);
EuclideanCloud load_cloud(const std::filesystem::path& path);
/// .json files use the JSON schema, anything else the edge-list text format.
Graph load_graph(const std::filesystem::path& path);

}  // namespace gromon::io
