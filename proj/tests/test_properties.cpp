#include <cmath>

#include "doctest.h"
#include "graphiso/cycles.hpp"
#include "graphiso/entropy.hpp"
#include "graphiso/generators.hpp"
#include "graphiso/stable_norm.hpp"

using namespace graphiso;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("scale invariance of the normalized invariants") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto g = gen::random_weighted({2, 5, 0.1, 10.0, 3}, gen::derive_seed(71, i));
    const long b = betti_number(g);
    const double hs = volume_entropy(g) * systole(g).length;
    const double mu = stable_ball_volume_exact(g).value * std::pow(volume(g), b / 2.0);
    for (double lambda : {0.1, 3.0, 42.0}) {
      const auto s = scale(g, lambda);
      CHECK(rel_close(volume_entropy(s) * systole(s).length, hs, 1e-8));
      CHECK(rel_close(stable_ball_volume_exact(s).value * std::pow(volume(s), b / 2.0), mu, 1e-8));
    }
  }
}

TEST_CASE("subdivision invariance") {
  for (const auto& g : {gen::theta(3, {1.0, 2.0, 3.0}), gen::complete(4)}) {
    const double h = volume_entropy(g);
    const double sys = systole(g).length;
    const double mu = stable_ball_volume_exact(g).value;
    for (int k : {2, 3, 5}) {
      const auto s = subdivide(g, g.edge(0).id, k);
      CHECK(std::abs(volume_entropy(s) - h) <= 1e-8);
      CHECK(std::abs(systole(s).length - sys) <= 1e-8);
      CHECK(std::abs(stable_ball_volume_exact(s).value - mu) <= 1e-8);
    }
  }
}

TEST_CASE("entropy decreases when a weight grows") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto g = gen::random_weighted({2, 5, 0.5, 2.0, 3}, gen::derive_seed(73, i));
    auto records = g.edge_records();
    records[0].w *= 1.5;
    const auto heavier = WeightedMultigraph::build(g.vertex_ids(), records);
    CHECK(volume_entropy(heavier) <= volume_entropy(g) + 1e-12);
  }
}
