#include "graphiso/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <queue>

#include "graphiso/error.hpp"
#include "graphiso/int_linalg.hpp"

namespace graphiso {

CycleWitness make_witness(const WeightedMultigraph& g, std::span<const double> weights,
                          std::vector<DirectedStep> walk) {
  CycleWitness w;
  w.homology.assign(g.edge_count(), 0);
  for (const auto& s : walk) {
    w.length += weights[s.edge];
    w.homology[s.edge] += s.forward ? 1 : -1;
  }
  w.walk = std::move(walk);
  return w;
}

std::optional<CycleWitness> shortest_cycle_through_edge(const WeightedMultigraph& g,
                                                        std::span<const double> weights, std::size_t edge,
                                                        double bound) {
  const auto& e = g.edge(edge);
  if (e.is_loop()) return make_witness(g, weights, {{edge, true}});

  // Dijkstra from v to u avoiding the edge itself.
  const double inf = std::numeric_limits<double>::infinity();
  const double budget = bound - weights[edge];
  std::vector<double> dist(g.vertex_count(), inf);
  std::vector<std::optional<Incidence>> pred(g.vertex_count());
  std::vector<std::size_t> pred_from(g.vertex_count());
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[e.v] = 0.0;
  queue.push({0.0, e.v});
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (d > dist[x]) continue;
    if (x == e.u) break;
    if (d >= budget) break;
    for (const auto& inc : g.incidences(x)) {
      if (inc.edge == edge) continue;
      const double nd = d + weights[inc.edge];
      if (nd < dist[inc.other]) {
        dist[inc.other] = nd;
        pred[inc.other] = inc;
        pred_from[inc.other] = x;
        queue.push({nd, inc.other});
      }
    }
  }
  if (dist[e.u] == inf || dist[e.u] >= budget) return std::nullopt;

  std::vector<DirectedStep> back;
  for (std::size_t x = e.u; x != e.v; x = pred_from[x]) back.push_back({pred[x]->edge, pred[x]->forward});
  std::vector<DirectedStep> walk{{edge, true}};
  walk.insert(walk.end(), back.rbegin(), back.rend());
  return make_witness(g, weights, std::move(walk));
}

CycleWitness shortest_cycle_through_edge(const WeightedMultigraph& g, std::span<const double> weights,
                                         const std::string& edge_id) {
  const std::size_t e = g.edge_index(edge_id);
  auto c = shortest_cycle_through_edge(g, weights, e, std::numeric_limits<double>::infinity());
  if (!c) throw Error(ErrorCode::NoCycleThroughEdge, "edge '" + edge_id + "' is a bridge");
  return *c;
}

SystoleResult systole(const WeightedMultigraph& g, std::span<const double> weights) {
  std::optional<CycleWitness> best;
  double best_len = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (weights[e] >= best_len) continue;
    auto c = shortest_cycle_through_edge(g, weights, e, best_len);
    if (c && c->length < best_len) {
      best_len = c->length;
      best = std::move(c);
    }
  }
  if (!best) throw Error(ErrorCode::NoCycle, "graph has no cycle");
  return {best->length, std::move(*best)};
}

SystoleResult systole(const WeightedMultigraph& g) {
  require_connected(g);
  const auto w = g.weights();
  return systole(g, w);
}

namespace {

struct BaseSearch {
  BasisStatus status = BasisStatus::not_found;
  std::vector<CycleWitness> cycles;
};

BaseSearch search_base(const WeightedMultigraph& g, std::span<const double> w, std::size_t base, double sys,
                       long rank_target, long path_cap) {
  const double limit = sys + 1e-9 * std::max(1.0, sys);
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<DirectedStep> path;
  std::vector<intla::IntRow> chosen;
  BaseSearch out;
  long partial = 0;
  bool capped = false;

  // Simple cycles suffice: with positive weights a shortest reduced closed
  // walk cannot revisit a vertex.
  std::function<void(std::size_t, double, std::optional<std::size_t>)> dfs =
      [&](std::size_t at, double len, std::optional<std::size_t> came_by) {
        if (capped || static_cast<long>(chosen.size()) == rank_target) return;
        for (const auto& inc : g.incidences(at)) {
          if (came_by && inc.edge == *came_by) continue;
          const double next_len = len + w[inc.edge];
          if (next_len > limit) continue;
          if (++partial > path_cap) {
            capped = true;
            return;
          }
          if (inc.other == base) {
            if (next_len < sys - 1e-9 * std::max(1.0, sys)) continue;
            path.push_back({inc.edge, inc.forward});
            auto cyc = make_witness(g, w, path);
            path.pop_back();
            intla::IntRow cls(cyc.homology.begin(), cyc.homology.end());
            auto trial = chosen;
            trial.push_back(cls);
            if (intla::rank(trial) == static_cast<int>(trial.size())) {
              chosen.push_back(std::move(cls));
              out.cycles.push_back(std::move(cyc));
              if (static_cast<long>(chosen.size()) == rank_target) return;
            }
            continue;
          }
          if (on_path[inc.other]) continue;
          on_path[inc.other] = 1;
          path.push_back({inc.edge, inc.forward});
          dfs(inc.other, next_len, inc.edge);
          path.pop_back();
          on_path[inc.other] = 0;
          if (capped || static_cast<long>(chosen.size()) == rank_target) return;
        }
      };
  on_path[base] = 1;
  dfs(base, 0.0, std::nullopt);
  if (static_cast<long>(chosen.size()) == rank_target) out.status = BasisStatus::found;
  else if (capped) out.status = BasisStatus::inconclusive;
  return out;
}

}  // namespace

SystolicBasisResult detect_systolic_basis(const WeightedMultigraph& g, long path_cap) {
  require_connected(g);
  const long b = betti_number(g);
  SystolicBasisResult res;
  if (b < 1) return res;
  const auto w = g.weights();
  res.systole = systole(g, w).length;
  bool any_capped = false;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    auto found = search_base(g, w, x, res.systole, b, path_cap);
    if (found.status == BasisStatus::found) {
      res.status = BasisStatus::found;
      res.base_vertex = x;
      res.cycles = std::move(found.cycles);
      return res;
    }
    any_capped = any_capped || found.status == BasisStatus::inconclusive;
  }
  res.status = any_capped ? BasisStatus::inconclusive : BasisStatus::not_found;
  return res;
}

double min_closed_walk_in_class(const WeightedMultigraph& g, std::span<const long> target, int n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "multiplier must be >= 1");
  if (target.size() != g.edge_count()) throw Error(ErrorCode::NotACycle, "target has wrong length");
  constexpr std::size_t kMaxEdges = 12;
  constexpr long kMaxCount = 64;
  if (g.edge_count() > kMaxEdges) throw Error(ErrorCode::OracleBudgetExceeded, "too many edges for the walk oracle");

  std::vector<long> boundary(g.vertex_count(), 0);
  std::vector<long> count(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const long c = static_cast<long>(n) * target[e];
    if (std::labs(c) > kMaxCount) throw Error(ErrorCode::OracleBudgetExceeded, "coefficients too large");
    count[e] = std::labs(c);
    boundary[g.edge(e).v] += target[e];
    boundary[g.edge(e).u] -= target[e];
  }
  if (std::any_of(boundary.begin(), boundary.end(), [](long x) { return x != 0; })) {
    throw Error(ErrorCode::NotACycle, "target has nonzero boundary");
  }

  double base_length = 0.0;
  bool empty = true;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    base_length += count[e] * g.edge(e).w;
    empty = empty && count[e] == 0;
  }
  if (empty) return 0.0;

  // A walk with the prescribed net counts traverses edge e |n t_e| + 2k_e
  // times. Any balanced connected multiset of traversals is an Euler
  // circuit, so only the set of edges given an extra back-and-forth pair
  // matters, and one pair per edge is enough.
  const std::size_t m = g.edge_count();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    double extra = 0.0;
    bool redundant = false;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask & (1u << e)) {
        if (count[e] > 0) redundant = true;
        extra += 2.0 * g.edge(e).w;
      }
    }
    if (redundant || base_length + extra >= best) continue;
    std::vector<std::size_t> parent(g.vertex_count());
    for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::vector<char> touched(g.vertex_count(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      if (count[e] == 0 && !(mask & (1u << e))) continue;
      touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
      parent[find(g.edge(e).u)] = find(g.edge(e).v);
    }
    std::optional<std::size_t> root;
    bool connected = true;
    for (std::size_t v = 0; v < g.vertex_count() && connected; ++v) {
      if (!touched[v]) continue;
      if (!root) root = find(v);
      else connected = find(v) == *root;
    }
    if (connected) best = base_length + extra;
  }
  return best / n;
}

std::string_view to_string(BasisStatus s) {
  switch (s) {
    case BasisStatus::found: return "found";
    case BasisStatus::not_found: return "not_found";
    case BasisStatus::inconclusive: return "inconclusive";
  }
  return "not_found";
}

}  // namespace graphiso
