#pragma once

#include <cstdint>
#include <vector>

#include "graphiso/graph.hpp"

namespace graphiso::gen {

/// One vertex with b loops. Empty `weights` means unit weights.
WeightedMultigraph bouquet(int b, std::vector<double> weights = {});

/// Two vertices joined by p parallel edges, all oriented from "a" to "b".
WeightedMultigraph theta(int p, std::vector<double> weights = {});

/// Complete simple graph on n vertices, unit weights.
WeightedMultigraph complete(int n);

/// Cycle of n unit edges (n = 1 gives a single loop).
WeightedMultigraph cycle(int n);

/// Uniformly drawn simple connected v-regular graph on n vertices, unit
/// weights (pairing model with rejection). Requires n*v even and v < n.
WeightedMultigraph random_regular(int n, int v, std::uint64_t seed);

struct RandomWeightedParams {
  int b_min = 2;
  int b_max = 8;
  double w_min = 0.1;
  double w_max = 10.0;
  int extra_vertices_max = 4;  // vertices beyond one, drawn from [0, b + this]
};

/// Connected multigraph with Betti number drawn from [b_min, b_max]: a random
/// tree plus b random extra edges (loops and parallel edges allowed), weights
/// uniform in [w_min, w_max].
WeightedMultigraph random_weighted(const RandomWeightedParams& params, std::uint64_t seed);

/// Same construction with unit weights.
WeightedMultigraph random_unit(int b_min, int b_max, std::uint64_t seed);

/// Deterministic per-instance seed derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace graphiso::gen
