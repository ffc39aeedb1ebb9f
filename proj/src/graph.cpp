#include "graphiso/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "graphiso/error.hpp"

namespace graphiso {

WeightedMultigraph WeightedMultigraph::build(std::vector<std::string> vertex_ids,
                                             const std::vector<EdgeRecord>& edges) {
  WeightedMultigraph g;
  g.vertex_ids_ = std::move(vertex_ids);
  for (std::size_t i = 0; i < g.vertex_ids_.size(); ++i) {
    if (!g.vertex_lookup_.emplace(g.vertex_ids_[i], i).second) {
      throw Error(ErrorCode::DuplicateVertexId, "vertex '" + g.vertex_ids_[i] + "' listed twice");
    }
  }
  g.adjacency_.resize(g.vertex_ids_.size());
  g.edges_.reserve(edges.size());
  for (const auto& rec : edges) {
    if (!(rec.w > 0.0) || !std::isfinite(rec.w)) {
      throw Error(ErrorCode::NonPositiveWeight, "edge '" + rec.id + "' has weight " + std::to_string(rec.w));
    }
    auto u = g.find_vertex(rec.u);
    auto v = g.find_vertex(rec.v);
    if (!u || !v) {
      throw Error(ErrorCode::DanglingEndpoint, "edge '" + rec.id + "' references an unknown vertex");
    }
    if (!g.edge_lookup_.emplace(rec.id, g.edges_.size()).second) {
      throw Error(ErrorCode::DuplicateEdgeId, "edge id '" + rec.id + "' used twice");
    }
    const std::size_t e = g.edges_.size();
    g.edges_.push_back(Edge{rec.id, *u, *v, rec.w});
    g.adjacency_[*u].push_back(Incidence{e, *v, true});
    g.adjacency_[*v].push_back(Incidence{e, *u, false});
  }
  return g;
}

std::optional<std::size_t> WeightedMultigraph::find_vertex(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> WeightedMultigraph::find_edge(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedMultigraph::edge_index(const std::string& id) const {
  auto e = find_edge(id);
  if (!e) throw Error(ErrorCode::UnknownEdge, "no edge '" + id + "'");
  return *e;
}

std::vector<double> WeightedMultigraph::weights() const {
  std::vector<double> w(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) w[e] = edges_[e].w;
  return w;
}

std::vector<EdgeRecord> WeightedMultigraph::edge_records() const {
  std::vector<EdgeRecord> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({e.id, vertex_ids_[e.u], vertex_ids_[e.v], e.w});
  return out;
}

std::size_t WeightedMultigraph::component_count() const {
  const std::size_t n = vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : edges_) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

long betti_number(const WeightedMultigraph& g) {
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) +
         static_cast<long>(g.component_count());
}

double volume(const WeightedMultigraph& g) {
  double total = 0.0;
  for (const auto& e : g.edges()) total += e.w;
  return total;
}

ValenceProfile valence_profile(const WeightedMultigraph& g) {
  ValenceProfile p;
  p.valence.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    p.valence[v] = static_cast<int>(g.incidences(v).size());
  }
  if (!p.valence.empty()) {
    auto [lo, hi] = std::minmax_element(p.valence.begin(), p.valence.end());
    p.min = *lo;
    p.max = *hi;
  }
  return p;
}

bool has_unit_weights(const WeightedMultigraph& g, double tol) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [tol](const auto& e) { return std::abs(e.w - 1.0) <= tol; });
}

void require_connected(const WeightedMultigraph& g) {
  if (g.vertex_count() == 0 || !g.is_connected()) {
    throw Error(ErrorCode::NotConnected, "graph has " + std::to_string(g.component_count()) + " components");
  }
}

WeightedMultigraph scale(const WeightedMultigraph& g, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::NonPositiveScale, "scale factor " + std::to_string(lambda));
  }
  auto records = g.edge_records();
  for (auto& r : records) r.w *= lambda;
  return WeightedMultigraph::build(g.vertex_ids(), records);
}

namespace {

std::string fresh_prefix(const WeightedMultigraph& g, const std::string& base, int k) {
  std::string prefix = base;
  for (;;) {
    bool clash = false;
    for (int j = 1; j <= k && !clash; ++j) {
      const std::string id = prefix + "." + std::to_string(j);
      clash = g.find_vertex(id).has_value() || g.find_edge(id).has_value();
    }
    if (!clash) return prefix;
    prefix += "'";
  }
}

}  // namespace

WeightedMultigraph subdivide(const WeightedMultigraph& g, const std::string& edge_id, int k) {
  const std::size_t target = g.edge_index(edge_id);
  if (k < 1) throw Error(ErrorCode::BadPartCount, "part count " + std::to_string(k));
  if (k == 1) return g;

  const auto& edge = g.edge(target);
  const std::string prefix = fresh_prefix(g, edge.id, k);
  auto vertices = g.vertex_ids();
  std::vector<EdgeRecord> records;
  records.reserve(g.edge_count() + static_cast<std::size_t>(k));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& cur = g.edge(e);
    if (e != target) {
      records.push_back({cur.id, g.vertex_id(cur.u), g.vertex_id(cur.v), cur.w});
      continue;
    }
    std::string prev = g.vertex_id(cur.u);
    for (int j = 1; j <= k; ++j) {
      std::string next;
      if (j == k) {
        next = g.vertex_id(cur.v);
      } else {
        next = prefix + "." + std::to_string(j);
        vertices.push_back(next);
      }
      records.push_back({prefix + "." + std::to_string(j), prev, next, cur.w / k});
      prev = next;
    }
  }
  return WeightedMultigraph::build(std::move(vertices), records);
}

WeightedMultigraph subdivide_all(const WeightedMultigraph& g, int k) {
  WeightedMultigraph out = g;
  for (const auto& e : g.edges()) out = subdivide(out, e.id, k);
  return out;
}

std::vector<Chain> maximal_chains(const WeightedMultigraph& g) {
  const auto profile = valence_profile(g);
  const auto& val = profile.valence;
  std::vector<char> used(g.edge_count(), 0);
  std::vector<Chain> chains;

  // Follows valence-2 vertices from `start` along `first` until a branch
  // vertex (or `stop`) is reached.
  auto walk = [&](std::size_t start, Incidence first, std::optional<std::size_t> stop) {
    Chain c;
    c.start = start;
    Incidence inc = first;
    for (;;) {
      used[inc.edge] = 1;
      c.edges.push_back(inc.edge);
      c.length += g.edge(inc.edge).w;
      const std::size_t at = inc.other;
      if (val[at] != 2 || (stop && at == *stop)) {
        c.end = at;
        break;
      }
      const auto& around = g.incidences(at);
      inc = around[0].edge == inc.edge ? around[1] : around[0];
    }
    return c;
  };

  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (val[s] == 2) continue;
    for (const auto& inc : g.incidences(s)) {
      if (!used[inc.edge]) chains.push_back(walk(s, inc, std::nullopt));
    }
  }
  // What is left are components in which every vertex has valence 2.
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (used[e]) continue;
    const std::size_t s = g.edge(e).u;
    Chain c = walk(s, Incidence{e, g.edge(e).v, true}, s);
    c.closed = true;
    chains.push_back(std::move(c));
  }
  return chains;
}

double c_min_literal(const WeightedMultigraph& g) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : g.edges()) best = std::min(best, e.w);
  return best;
}

double c_min_maximal(const WeightedMultigraph& g) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : maximal_chains(g)) best = std::min(best, c.length);
  return best;
}

double c_max(const WeightedMultigraph& g) {
  double best = 0.0;
  for (const auto& c : maximal_chains(g)) best = std::max(best, c.length);
  return best;
}

}  // namespace graphiso

namespace graphiso {

WeightedMultigraph two_core(const WeightedMultigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> val = valence_profile(g).valence;
  std::vector<char> vertex_gone(n, 0), edge_gone(g.edge_count(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (val[v] <= 1) stack.push_back(v);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (vertex_gone[v]) continue;
    vertex_gone[v] = 1;
    for (const auto& inc : g.incidences(v)) {
      if (edge_gone[inc.edge]) continue;
      edge_gone[inc.edge] = 1;
      if (--val[inc.other] <= 1 && !vertex_gone[inc.other]) stack.push_back(inc.other);
    }
  }
  std::vector<std::string> ids;
  for (std::size_t v = 0; v < n; ++v)
    if (!vertex_gone[v]) ids.push_back(g.vertex_id(v));
  std::vector<EdgeRecord> records;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (edge_gone[e]) continue;
    const auto& ed = g.edge(e);
    records.push_back({ed.id, g.vertex_id(ed.u), g.vertex_id(ed.v), ed.w});
  }
  return WeightedMultigraph::build(std::move(ids), records);
}

WeightedMultigraph smooth_chains(const WeightedMultigraph& g) {
  const auto core = two_core(g);
  std::vector<EdgeRecord> records;
  for (std::size_t e = 0; e < core.edge_count(); ++e) {
    const auto& ed = core.edge(e);
    records.push_back({ed.id, core.vertex_id(ed.u), core.vertex_id(ed.v), ed.w});
  }
  std::vector<std::string> ids = core.vertex_ids();
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t k = 0; k < ids.size() && !merged; ++k) {
      const std::string& v = ids[k];
      std::vector<std::size_t> at;
      bool loop = false;
      for (std::size_t r = 0; r < records.size(); ++r) {
        if (records[r].u == v && records[r].v == v) loop = true;
        if (records[r].u == v || records[r].v == v) at.push_back(r);
      }
      if (loop || at.size() != 2) continue;
      auto& first = records[at[0]];
      const auto& second = records[at[1]];
      const std::string a = first.u == v ? first.v : first.u;
      const std::string c = second.u == v ? second.v : second.u;
      first = {first.id, a, c, first.w + second.w};
      records.erase(records.begin() + static_cast<std::ptrdiff_t>(at[1]));
      ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(k));
      merged = true;
    }
  }
  return WeightedMultigraph::build(std::move(ids), records);
}

}  // namespace graphiso
