#pragma once

#include <iosfwd>
#include <string>

#include "graphiso/graph.hpp"
#include "graphiso/subshift.hpp"
#include "json.hpp"

namespace graphiso {

/// {"vertices": [ids], "edges": [{"id", "u", "v", "w"}]}. Unknown top-level
/// keys are rejected. Throws ParseError, plus the graph validation errors.
WeightedMultigraph graph_from_json(const nlohmann::json& j);
WeightedMultigraph parse_graph(const std::string& text);
WeightedMultigraph read_graph_file(const std::string& path);

nlohmann::json graph_to_json(const WeightedMultigraph& g);

/// {"n": int, "rows": [[0/1, ...], ...]}. Throws ParseError, NonSquare, BadParameter.
TransitionMatrix matrix_from_json(const nlohmann::json& j);
TransitionMatrix parse_matrix(const std::string& text);
TransitionMatrix read_matrix_file(const std::string& path);

nlohmann::json matrix_to_json(const TransitionMatrix& a);

}  // namespace graphiso
