#include <cmath>
#include <limits>

#include "doctest.h"
#include "graphiso/cycles.hpp"
#include "graphiso/generators.hpp"
#include "graphiso/stable_norm.hpp"
#include "support.hpp"

using namespace graphiso;
using testing::error_of;
using testing::make;

namespace {

// Shortest cycle by exhaustion: an edge set is a cycle when it is connected
// and every vertex it touches has degree 2 in it (a loop counts twice).
double brute_force_systole(const WeightedMultigraph& g) {
  const std::size_t m = g.edge_count();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> degree(g.vertex_count(), 0);
    std::vector<std::size_t> parent(g.vertex_count());
    for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    double len = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
      if (!(mask & (1u << e))) continue;
      degree[g.edge(e).u] += 1;
      degree[g.edge(e).v] += 1;
      parent[find(g.edge(e).u)] = find(g.edge(e).v);
      len += g.edge(e).w;
    }
    bool ok = true;
    std::optional<std::size_t> root;
    for (std::size_t v = 0; v < g.vertex_count() && ok; ++v) {
      if (degree[v] == 0) continue;
      ok = degree[v] == 2;
      if (!root) root = find(v);
      ok = ok && find(v) == *root;
    }
    if (ok) best = std::min(best, len);
  }
  return best;
}

// Consecutive steps share a vertex and the walk returns to its start.
bool is_closed_walk(const WeightedMultigraph& g, const CycleWitness& w) {
  if (w.walk.empty()) return false;
  auto tail = [&](const DirectedStep& s) { return s.forward ? g.edge(s.edge).u : g.edge(s.edge).v; };
  auto head = [&](const DirectedStep& s) { return s.forward ? g.edge(s.edge).v : g.edge(s.edge).u; };
  for (std::size_t i = 0; i < w.walk.size(); ++i) {
    if (head(w.walk[i]) != tail(w.walk[(i + 1) % w.walk.size()])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("systole on named graphs") {
  CHECK(systole(gen::bouquet(3, {2.0, 0.5, 1.0})).length == doctest::Approx(0.5));
  CHECK(systole(gen::theta(3, {1.0, 2.0, 3.0})).length == doctest::Approx(3.0));
  CHECK(systole(gen::complete(4)).length == doctest::Approx(3.0));
  CHECK(systole(gen::complete(5)).length == doctest::Approx(3.0));
  CHECK(systole(gen::cycle(5)).length == doctest::Approx(5.0));
  CHECK(error_of([] { systole(make({"a", "b"}, {{"x", "a", "b", 1}})); }) == ErrorCode::NoCycle);
  CHECK(error_of([] { systole(make({"a", "b", "c"}, {{"x", "a", "a", 1}})); }) == ErrorCode::NotConnected);
}

TEST_CASE("systole agrees with exhaustive search") {
  gen::RandomWeightedParams p;
  p.b_max = 6;
  for (std::uint64_t i = 0; i < 150; ++i) {
    const auto g = gen::random_weighted(p, gen::derive_seed(21, i));
    if (g.edge_count() > 14) continue;
    const auto s = systole(g);
    CHECK(s.length == doctest::Approx(brute_force_systole(g)).epsilon(1e-12));
    CHECK(is_closed_walk(g, s.witness));
    CHECK(s.witness.length == doctest::Approx(s.length));
  }
}

TEST_CASE("systole with override weights allows zeros") {
  const auto g = gen::theta(3);
  const std::vector<double> w{0.0, 0.0, 1.0};
  CHECK(systole(g, w).length == doctest::Approx(0.0));
  const std::vector<double> w2{0.5, 0.0, 1.0};
  CHECK(systole(g, w2).length == doctest::Approx(0.5));
}

TEST_CASE("shortest cycle through an edge") {
  const auto g = make({"a", "b", "c"}, {{"l", "a", "a", 4}, {"x", "a", "b", 1}, {"y", "b", "c", 1}, {"z", "c", "b", 1}});
  const auto w = g.weights();
  CHECK(shortest_cycle_through_edge(g, w, "l").length == doctest::Approx(4.0));
  CHECK(shortest_cycle_through_edge(g, w, "y").length == doctest::Approx(2.0));
  CHECK(error_of([&] { shortest_cycle_through_edge(g, w, "x"); }) == ErrorCode::NoCycleThroughEdge);
  CHECK(error_of([&] { shortest_cycle_through_edge(g, w, "q"); }) == ErrorCode::UnknownEdge);
  CHECK_FALSE(shortest_cycle_through_edge(g, w, 1, 100.0).has_value());
  CHECK_FALSE(shortest_cycle_through_edge(g, w, 2, 1.5).has_value());
}

TEST_CASE("systolic basis detection") {
  SUBCASE("bouquet: the loops themselves") {
    const auto r = detect_systolic_basis(gen::bouquet(4));
    CHECK(r.status == BasisStatus::found);
    CHECK(r.cycles.size() == 4);
  }
  SUBCASE("unit theta and K4") {
    CHECK(detect_systolic_basis(gen::theta(3)).status == BasisStatus::found);
    const auto k4 = detect_systolic_basis(gen::complete(4));
    CHECK(k4.status == BasisStatus::found);
    CHECK(k4.systole == doctest::Approx(3.0));
  }
  SUBCASE("a single systolic cycle is not enough") {
    CHECK(detect_systolic_basis(gen::theta(3, {1.0, 2.0, 3.0})).status == BasisStatus::not_found);
  }
  SUBCASE("certified classes have full rank and systolic length") {
    const auto g = gen::complete(5);
    const auto r = detect_systolic_basis(g);
    REQUIRE(r.status == BasisStatus::found);
    std::vector<intla::IntRow> rows;
    for (const auto& c : r.cycles) {
      CHECK(c.length == doctest::Approx(r.systole));
      CHECK(is_closed_walk(g, c));
      rows.emplace_back(c.homology.begin(), c.homology.end());
    }
    CHECK(intla::rank(rows) == betti_number(g));
  }
  SUBCASE("a tiny path cap reports inconclusive, not absent") {
    CHECK(detect_systolic_basis(gen::complete(5), 1).status == BasisStatus::inconclusive);
  }
}

TEST_CASE("walk oracle: stable norm is the limit of minimal closed walks") {
  // Two loops joined by a bridge; a class using both loops must cross the
  // bridge twice, a cost that vanishes per period as n grows.
  const auto g = make({"a", "b"}, {{"p", "a", "a", 1.0}, {"q", "b", "b", 2.0}, {"r", "a", "b", 3.0}});
  const std::vector<long> c{1, 1, 0};
  const std::vector<double> cd{1.0, 1.0, 0.0};
  for (int n : {1, 2, 4, 8}) {
    CHECK(min_closed_walk_in_class(g, c, n) == doctest::Approx(3.0 + 6.0 / n));
  }
  CHECK(stable_norm(g, cd) == doctest::Approx(3.0));
  CHECK(error_of([&] { min_closed_walk_in_class(g, std::vector<long>{0, 0, 1}, 1); }) == ErrorCode::NotACycle);
  CHECK(error_of([&] { min_closed_walk_in_class(g, c, 0); }) == ErrorCode::BadParameter);
}

TEST_CASE("walk oracle matches the weighted l1 norm on connected supports") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto g = gen::random_weighted({2, 4, 0.5, 3.0, 2}, gen::derive_seed(4, i));
    if (g.edge_count() > 10) continue;
    const auto basis = cycle_basis(g);
    for (const auto& c : basis.cycles) {
      std::vector<double> cd(c.begin(), c.end());
      // Fundamental cycles are simple, so one period already realizes the norm.
      CHECK(min_closed_walk_in_class(g, c, 1) == doctest::Approx(stable_norm(g, cd)));
    }
  }
}
