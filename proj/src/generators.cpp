#include "graphiso/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "graphiso/error.hpp"

namespace graphiso::gen {

namespace {

std::vector<std::string> vertex_names(int n) {
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  return ids;
}

std::string edge_name(std::size_t i) { return "e" + std::to_string(i); }

std::vector<double> resolve_weights(std::vector<double> weights, int count) {
  if (weights.empty()) weights.assign(static_cast<std::size_t>(count), 1.0);
  if (weights.size() != static_cast<std::size_t>(count)) {
    throw Error(ErrorCode::InfeasibleParameters,
                "expected " + std::to_string(count) + " weights, got " + std::to_string(weights.size()));
  }
  return weights;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over base + golden-ratio stride
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

WeightedMultigraph bouquet(int b, std::vector<double> weights) {
  if (b < 0) throw Error(ErrorCode::InfeasibleParameters, "bouquet needs b >= 0");
  weights = resolve_weights(std::move(weights), b);
  std::vector<EdgeRecord> edges;
  for (int i = 0; i < b; ++i) edges.push_back({edge_name(static_cast<std::size_t>(i)), "v0", "v0", weights[i]});
  return WeightedMultigraph::build({"v0"}, edges);
}

WeightedMultigraph theta(int p, std::vector<double> weights) {
  if (p < 1) throw Error(ErrorCode::InfeasibleParameters, "theta needs p >= 1");
  weights = resolve_weights(std::move(weights), p);
  std::vector<EdgeRecord> edges;
  for (int i = 0; i < p; ++i) edges.push_back({edge_name(static_cast<std::size_t>(i)), "a", "b", weights[i]});
  return WeightedMultigraph::build({"a", "b"}, edges);
}

WeightedMultigraph complete(int n) {
  if (n < 1) throw Error(ErrorCode::InfeasibleParameters, "complete needs n >= 1");
  auto ids = vertex_names(n);
  std::vector<EdgeRecord> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({edge_name(edges.size()), ids[i], ids[j], 1.0});
  return WeightedMultigraph::build(ids, edges);
}

WeightedMultigraph cycle(int n) {
  if (n < 1) throw Error(ErrorCode::InfeasibleParameters, "cycle needs n >= 1");
  auto ids = vertex_names(n);
  std::vector<EdgeRecord> edges;
  for (int i = 0; i < n; ++i) edges.push_back({edge_name(edges.size()), ids[i], ids[(i + 1) % n], 1.0});
  return WeightedMultigraph::build(ids, edges);
}

WeightedMultigraph random_regular(int n, int v, std::uint64_t seed) {
  if (n < 1 || v < 1 || v >= n || (static_cast<long>(n) * v) % 2 != 0) {
    throw Error(ErrorCode::InfeasibleParameters,
                "random_regular(" + std::to_string(n) + ", " + std::to_string(v) + ") is infeasible");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> points;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < v; ++k) points.push_back(i);

  constexpr int kMaxAttempts = 1000000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
      int a = points[i], b = points[i + 1];
      if (a == b) simple = false;
      else simple = seen.insert({std::min(a, b), std::max(a, b)}).second;
    }
    if (!simple) continue;
    auto ids = vertex_names(n);
    std::vector<EdgeRecord> edges;
    for (const auto& [a, b] : seen) edges.push_back({edge_name(edges.size()), ids[a], ids[b], 1.0});
    auto g = WeightedMultigraph::build(ids, edges);
    if (g.is_connected()) return g;
  }
  throw Error(ErrorCode::InfeasibleParameters, "no simple connected regular graph found");
}

namespace {

WeightedMultigraph random_tree_plus_edges(int b, int extra_vertices, std::mt19937_64& rng,
                                          const auto& draw_weight) {
  const int n = 1 + extra_vertices;
  auto ids = vertex_names(n);
  std::vector<EdgeRecord> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    edges.push_back({edge_name(edges.size()), ids[parent(rng)], ids[i], draw_weight()});
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int k = 0; k < b; ++k) {
    int a = any(rng), c = any(rng);
    edges.push_back({edge_name(edges.size()), ids[a], ids[c], draw_weight()});
  }
  return WeightedMultigraph::build(ids, edges);
}

}  // namespace

WeightedMultigraph random_weighted(const RandomWeightedParams& p, std::uint64_t seed) {
  if (p.b_min < 0 || p.b_max < p.b_min || !(p.w_min > 0.0) || p.w_max < p.w_min || p.extra_vertices_max < 0) {
    throw Error(ErrorCode::InfeasibleParameters, "invalid random_weighted parameters");
  }
  std::mt19937_64 rng(seed);
  const int b = std::uniform_int_distribution<int>(p.b_min, p.b_max)(rng);
  const int extra = std::uniform_int_distribution<int>(0, b + p.extra_vertices_max)(rng);
  std::uniform_real_distribution<double> weight(p.w_min, p.w_max);
  return random_tree_plus_edges(b, extra, rng, [&] { return weight(rng); });
}

WeightedMultigraph random_unit(int b_min, int b_max, std::uint64_t seed) {
  if (b_min < 0 || b_max < b_min) throw Error(ErrorCode::InfeasibleParameters, "invalid b range");
  std::mt19937_64 rng(seed);
  const int b = std::uniform_int_distribution<int>(b_min, b_max)(rng);
  const int extra = std::uniform_int_distribution<int>(0, b + 4)(rng);
  return random_tree_plus_edges(b, extra, rng, [] { return 1.0; });
}

}  // namespace graphiso::gen
