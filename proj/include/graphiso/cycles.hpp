#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphiso/graph.hpp"

namespace graphiso {

struct DirectedStep {
  std::size_t edge;
  bool forward;  // traversed in the edge's stored (u,v) order
};

/// Closed edge walk with its length and signed traversal counts per edge.
struct CycleWitness {
  std::vector<DirectedStep> walk;
  double length = 0.0;
  std::vector<long> homology;
};

CycleWitness make_witness(const WeightedMultigraph& g, std::span<const double> weights,
                          std::vector<DirectedStep> walk);

struct SystoleResult {
  double length = 0.0;
  CycleWitness witness;
};

/// Weighted girth: min over edges e={u,v} of w(e) + dist_{g-e}(u,v), loops
/// taken as they are. Throws NotConnected, NoCycle.
SystoleResult systole(const WeightedMultigraph& g);

/// Same computation under override weights (zero allowed, e.g. LP iterates).
/// Does not require connectivity. Throws NoCycle when g is a forest.
SystoleResult systole(const WeightedMultigraph& g, std::span<const double> weights);

/// Shortest simple cycle through an edge under override weights. Among
/// equal-length candidates the path found first in edge input order wins.
/// Throws UnknownEdge, NoCycleThroughEdge.
CycleWitness shortest_cycle_through_edge(const WeightedMultigraph& g, std::span<const double> weights,
                                         const std::string& edge_id);

/// Index form; nullopt for bridges. `bound` prunes the search: paths that
/// cannot produce a cycle shorter than it are not explored.
std::optional<CycleWitness> shortest_cycle_through_edge(const WeightedMultigraph& g,
                                                        std::span<const double> weights, std::size_t edge,
                                                        double bound);

enum class BasisStatus { found, not_found, inconclusive };

struct SystolicBasisResult {
  BasisStatus status = BasisStatus::not_found;
  std::size_t base_vertex = 0;
  double systole = 0.0;
  std::vector<CycleWitness> cycles;  // b systolic cycles based at base_vertex
};

/// Looks for a vertex carrying b systolic cycles whose homology classes have
/// rank b. Independence in homology is what gets certified (classes of rank
/// b in a rank-b free group form a free basis of the subgroup they generate,
/// which is the property the entropy lower bound relies on). Search is capped
/// at `path_cap` partial paths per vertex; hitting the cap gives
/// `inconclusive`, never `not_found`.
SystolicBasisResult detect_systolic_basis(const WeightedMultigraph& g, long path_cap = 1000000);

/// Brute-force test oracle: minimum length of a closed walk whose signed
/// traversal counts equal n*target, divided by n. Requires an integral
/// cycle; small instances only (|E| <= 12). Throws NotACycle, BadParameter,
/// OracleBudgetExceeded.
double min_closed_walk_in_class(const WeightedMultigraph& g, std::span<const long> target, int n);

std::string_view to_string(BasisStatus s);

}  // namespace graphiso
