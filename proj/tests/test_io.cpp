#include "doctest.h"
#include "graphiso/generators.hpp"
#include "graphiso/graph_io.hpp"
#include "support.hpp"

using namespace graphiso;
using testing::error_of;

TEST_CASE("graph round trip") {
  const auto g = gen::random_weighted({}, 3);
  const auto h = parse_graph(graph_to_json(g).dump());
  REQUIRE(h.edge_count() == g.edge_count());
  CHECK(h.vertex_ids() == g.vertex_ids());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    CHECK(h.edge(e).id == g.edge(e).id);
    CHECK(h.edge(e).u == g.edge(e).u);
    CHECK(h.edge(e).w == g.edge(e).w);
  }
}

TEST_CASE("graph parse errors") {
  CHECK(error_of([] { parse_graph("{"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_graph("[]"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_graph(R"({"vertices": ["a"], "edges": [], "extra": 1})"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_graph(R"({"vertices": ["a"]})"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_graph(R"({"vertices": [1], "edges": []})"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_graph(R"({"vertices": ["a"], "edges": [{"id": "e", "u": "a", "v": "a"}]})"); }) ==
        ErrorCode::ParseError);
  CHECK(error_of([] { parse_graph(R"({"vertices": ["a"], "edges": [{"id": "e", "u": "a", "v": "a", "w": "1"}]})"); }) ==
        ErrorCode::ParseError);
  CHECK(error_of([] { parse_graph(R"({"vertices": ["a"], "edges": [{"id": "e", "u": "a", "v": "a", "w": 0}]})"); }) ==
        ErrorCode::NonPositiveWeight);
  CHECK(error_of([] { read_graph_file("/nonexistent/graph.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("matrix round trip and errors") {
  const auto a = equality_family(3);
  const auto b = parse_matrix(matrix_to_json(a).dump());
  CHECK(b.rows() == a.rows());
  CHECK(error_of([] { parse_matrix(R"({"n": 2, "rows": [[0, 1]]})"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { parse_matrix(R"({"n": 1, "rows": [[0, 1]]})"); }) == ErrorCode::NonSquare);
  CHECK(error_of([] { parse_matrix(R"({"n": 1, "rows": [[3]]})"); }) == ErrorCode::BadParameter);
  CHECK(error_of([] { parse_matrix(R"({"n": 1, "rows": [[1]], "m": 2})"); }) == ErrorCode::ParseError);
}
