#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace graphiso {

/// Raw edge description used to build a graph. Endpoints are vertex ids.
struct EdgeRecord {
  std::string id;
  std::string u;
  std::string v;
  double w = 1.0;
};

/// One end of an edge as seen from a vertex. A loop contributes two
/// incidences to its vertex, one per direction.
struct Incidence {
  std::size_t edge;
  std::size_t other;
  bool forward;  // true when the edge is traversed in its stored (u,v) order
};

/// Finite undirected multigraph with positive edge lengths. Loops and
/// parallel edges are allowed. Each edge keeps the (u,v) order it was built
/// with; that order fixes the sign convention of edge-space coordinates.
/// Immutable after construction.
class WeightedMultigraph {
public:
  struct Edge {
    std::string id;
    std::size_t u;
    std::size_t v;
    double w;

    bool is_loop() const noexcept { return u == v; }
  };

  WeightedMultigraph() = default;

  /// Validates and builds. Throws NonPositiveWeight, DanglingEndpoint,
  /// DuplicateEdgeId or DuplicateVertexId.
  static WeightedMultigraph build(std::vector<std::string> vertex_ids,
                                  const std::vector<EdgeRecord>& edges);

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_id(std::size_t v) const { return vertex_ids_.at(v); }
  const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Incidence>& incidences(std::size_t v) const { return adjacency_.at(v); }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_edge(const std::string& id) const;
  /// Like find_edge but throws UnknownEdge.
  std::size_t edge_index(const std::string& id) const;

  std::vector<double> weights() const;
  std::vector<EdgeRecord> edge_records() const;

  std::size_t component_count() const;
  bool is_connected() const { return component_count() == 1; }

private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
};

/// |E| - |V| + number of connected components.
long betti_number(const WeightedMultigraph& g);

double volume(const WeightedMultigraph& g);

struct ValenceProfile {
  std::vector<int> valence;  // per vertex, loops count twice
  int min = 0;
  int max = 0;
};

ValenceProfile valence_profile(const WeightedMultigraph& g);

bool has_unit_weights(const WeightedMultigraph& g, double tol = 1e-12);

/// Throws NotConnected unless g has exactly one component.
void require_connected(const WeightedMultigraph& g);

WeightedMultigraph scale(const WeightedMultigraph& g, double lambda);

/// Replaces an edge by a path of k edges of length w/k. New vertex and edge
/// ids are derived from the edge id; the remaining edges keep their ids.
WeightedMultigraph subdivide(const WeightedMultigraph& g, const std::string& edge_id, int k);

/// Subdivides every edge into k parts.
WeightedMultigraph subdivide_all(const WeightedMultigraph& g, int k);

/// Path whose interior vertices all have valence 2. `closed` marks a chain
/// that returns to its start (a valence-2 cycle component, or a chain
/// through valence-2 vertices whose two ends meet at the same branch vertex).
struct Chain {
  std::vector<std::size_t> edges;
  std::size_t start = 0;
  std::size_t end = 0;
  double length = 0.0;
  bool closed = false;
};

/// Enumerates maximal chains. Every edge lies in exactly one chain.
std::vector<Chain> maximal_chains(const WeightedMultigraph& g);

/// Literal reading: every single edge is a chain, so this is the least edge weight.
double c_min_literal(const WeightedMultigraph& g);
/// Shortest maximal chain.
double c_min_maximal(const WeightedMultigraph& g);
/// Longest maximal chain.
double c_max(const WeightedMultigraph& g);

}  // namespace graphiso

namespace graphiso {

/// Repeatedly strips vertices of valence <= 1 together with their edge.
/// The remaining graph has the same cycles and the same universal-cover
/// growth as g. Vertex and edge ids are preserved.
WeightedMultigraph two_core(const WeightedMultigraph& g);

/// Two-core with every valence-2 vertex suppressed: the two edges through
/// it merge into one edge carrying the summed weight and the first id. A
/// bare circle keeps one vertex with a loop. Cycle lengths, the stable
/// norm and the weighted Gram form on H_1 are unchanged.
WeightedMultigraph smooth_chains(const WeightedMultigraph& g);

}  // namespace graphiso
