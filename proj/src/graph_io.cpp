#include "graphiso/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "graphiso/error.hpp"

namespace graphiso {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

void require_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) fail(std::string(where) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(std::string("unknown key '") + key + "' in " + where);
  }
  for (const char* a : allowed) {
    if (!j.contains(a)) fail(std::string("missing key '") + a + "' in " + where);
  }
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

WeightedMultigraph graph_from_json(const json& j) {
  require_keys(j, {"vertices", "edges"}, "graph");
  if (!j["vertices"].is_array()) fail("'vertices' must be an array");
  if (!j["edges"].is_array()) fail("'edges' must be an array");

  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) vertices.push_back(as_string(v, "vertex id"));

  std::vector<EdgeRecord> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_object()) fail("edge must be an object");
    for (const char* k : {"id", "u", "v", "w"}) {
      if (!e.contains(k)) fail(std::string("edge is missing '") + k + "'");
    }
    if (!e["w"].is_number()) fail("edge weight must be a number");
    edges.push_back({as_string(e["id"], "edge id"), as_string(e["u"], "edge endpoint"),
                     as_string(e["v"], "edge endpoint"), e["w"].get<double>()});
  }
  return WeightedMultigraph::build(std::move(vertices), edges);
}

WeightedMultigraph parse_graph(const std::string& text) { return graph_from_json(parse_text(text)); }

WeightedMultigraph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

json graph_to_json(const WeightedMultigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"u", g.vertex_id(e.u)}, {"v", g.vertex_id(e.v)}, {"w", e.w}});
  }
  return {{"vertices", g.vertex_ids()}, {"edges", std::move(edges)}};
}

TransitionMatrix matrix_from_json(const json& j) {
  require_keys(j, {"n", "rows"}, "matrix");
  if (!j["n"].is_number_integer()) fail("'n' must be an integer");
  if (!j["rows"].is_array()) fail("'rows' must be an array");
  const auto n = j["n"].get<long>();
  if (n < 1 || static_cast<std::size_t>(n) != j["rows"].size()) fail("'n' does not match the row count");

  std::vector<std::vector<int>> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_array()) fail("matrix row must be an array");
    auto& row = rows.emplace_back();
    for (const auto& x : r) {
      if (!x.is_number_integer()) fail("matrix entries must be integers");
      row.push_back(x.get<int>());
    }
  }
  return TransitionMatrix(std::move(rows));
}

TransitionMatrix parse_matrix(const std::string& text) { return matrix_from_json(parse_text(text)); }

TransitionMatrix read_matrix_file(const std::string& path) { return parse_matrix(slurp(path)); }

json matrix_to_json(const TransitionMatrix& a) {
  return {{"n", a.size()}, {"rows", a.rows()}};
}

}  // namespace graphiso
