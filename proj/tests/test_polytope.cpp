#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "graphiso/polytope_volume.hpp"
#include "support.hpp"

using namespace graphiso;
using intla::IntRow;
using testing::error_of;

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

// Planar route independent of the arrangement code: boundary vertices lie
// on the lines orthogonal to each row, scaled to norm 1; sort by angle and
// apply the shoelace formula.
double polygon_area(const L1Section& s) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : s.rows) {
    for (double sign : {1.0, -1.0}) {
      const double x = -sign * static_cast<double>(r[1]);
      const double y = sign * static_cast<double>(r[0]);
      const double v[2] = {x, y};
      const double n = s.norm(v);
      pts.push_back({x / n, y / n});
    }
  }
  std::sort(pts.begin(), pts.end(), [](auto a, auto b) { return std::atan2(a.second, a.first) < std::atan2(b.second, b.first); });
  double area = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    const auto& q = pts[(i + 1) % pts.size()];
    area += p.first * q.second - p.second * q.first;
  }
  return 0.5 * std::abs(area);
}

L1Section random_section(std::mt19937_64& rng, int dim, int extra) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_real_distribution<double> weight(0.2, 3.0);
  std::vector<IntRow> rows;
  std::vector<double> w;
  for (int i = 0; i < dim; ++i) {
    IntRow r(static_cast<std::size_t>(dim), 0);
    r[static_cast<std::size_t>(i)] = 1;
    rows.push_back(r);
    w.push_back(weight(rng));
  }
  for (int i = 0; i < extra; ++i) {
    IntRow r(static_cast<std::size_t>(dim));
    for (auto& x : r) x = entry(rng);
    rows.push_back(r);
    w.push_back(weight(rng));
  }
  return canonical_section(dim, rows, w);
}

}  // namespace

TEST_CASE("cross-polytopes") {
  for (int k = 1; k <= 6; ++k) {
    std::vector<IntRow> rows;
    std::vector<double> w;
    double prod = 1.0;
    for (int i = 0; i < k; ++i) {
      IntRow r(static_cast<std::size_t>(k), 0);
      r[static_cast<std::size_t>(i)] = 1;
      rows.push_back(r);
      w.push_back(1.0 + i);
      prod *= 1.0 + i;
    }
    const auto ev = exact_volume(canonical_section(k, rows, w));
    CHECK(ev.volume == doctest::Approx(std::pow(2.0, k) / (factorial(k) * prod)).epsilon(1e-12));
    CHECK(ev.regions == static_cast<std::size_t>(1) << k);
  }
}

TEST_CASE("square from two diagonals") {
  const auto s = canonical_section(2, {{1, 1}, {1, -1}}, std::vector<double>{1.0, 1.0});
  CHECK(exact_volume(s).volume == doctest::Approx(1.0));
  const auto ext = coordinate_extents(s);
  CHECK(ext[0] == doctest::Approx(0.5));
  CHECK(ext[1] == doctest::Approx(0.5));
}

TEST_CASE("canonical rows merge multiples") {
  const auto s = canonical_section(2, {{2, 0}, {-1, 0}, {0, 0}, {0, 3}}, std::vector<double>{1.0, 1.0, 5.0, 1.0});
  REQUIRE(s.rows.size() == 2);
  CHECK(s.rows[0] == IntRow{1, 0});
  CHECK(s.weights[0] == doctest::Approx(3.0));
  CHECK(s.rows[1] == IntRow{0, 1});
  CHECK(s.weights[1] == doctest::Approx(3.0));
}

TEST_CASE("planar sections agree with the polygon route") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_section(rng, 2, 1 + trial % 5);
    CHECK(exact_volume(s).volume == doctest::Approx(polygon_area(s)).epsilon(1e-10));
  }
}

TEST_CASE("unimodular change of coordinates keeps the volume") {
  std::mt19937_64 rng(9);
  const IntRow u0{1, 1, 0}, u1{0, 1, 2}, u2{0, 0, 1};  // det 1
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_section(rng, 3, 3);
    std::vector<IntRow> moved;
    for (const auto& r : s.rows) moved.push_back({r[0] * u0[0] + r[1] * u1[0] + r[2] * u2[0],
                                                  r[0] * u0[1] + r[1] * u1[1] + r[2] * u2[1],
                                                  r[0] * u0[2] + r[1] * u1[2] + r[2] * u2[2]});
    const auto t = canonical_section(3, moved, s.weights);
    CHECK(exact_volume(t).volume == doctest::Approx(exact_volume(s).volume).epsilon(1e-10));
  }
}

TEST_CASE("Monte Carlo agrees with the exact volume") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 2 + trial % 3;
    const auto s = random_section(rng, dim, 3);
    const auto ext = coordinate_extents(s);
    double box = 1.0;
    for (double h : ext) box *= 2.0 * h;
    const std::uint64_t n = 200000;
    const auto c = mc_count(s, ext, n, 100 + trial);
    CHECK(c.total == n);
    const double p = static_cast<double>(c.inside) / static_cast<double>(n);
    const double est = box * p;
    const double ci = 2.5758293035489004 * box * std::sqrt(p * (1 - p) / static_cast<double>(n));
    // 99% intervals; a 2x margin keeps this deterministic test far from the edge.
    CHECK(std::abs(est - exact_volume(s).volume) <= 2.0 * ci);
  }
}

TEST_CASE("bounding box contains the polytope") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_section(rng, 3, 2);
    const auto ext = coordinate_extents(s);
    // A point beyond a box face lies outside the polytope.
    for (int i = 0; i < 3; ++i) {
      std::vector<double> x(3, 0.0);
      x[static_cast<std::size_t>(i)] = ext[static_cast<std::size_t>(i)] * 1.000001;
      CHECK(s.norm(x) > 1.0);
    }
  }
}

TEST_CASE("rows that do not span") {
  const auto s = canonical_section(2, {{1, 1}, {2, 2}}, std::vector<double>{1.0, 1.0});
  CHECK(error_of([&] { exact_volume(s); }) == ErrorCode::BadParameter);
}
