#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "graphiso/lp.hpp"
#include "support.hpp"

using namespace graphiso;
using testing::error_of;

namespace {

lp::Problem problem(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double> c) {
  lp::Problem p;
  p.a = DenseMatrix(a.size(), c.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) p.a(i, j) = a[i][j];
  p.b = std::move(b);
  p.c = std::move(c);
  return p;
}

// Best feasible vertex of a 2-variable LP: intersect every pair of boundary
// lines (constraints and the two axes).
double vertex_oracle_2d(const lp::Problem& p) {
  std::vector<std::array<double, 3>> lines;  // a x + b y = c
  for (std::size_t i = 0; i < p.b.size(); ++i) lines.push_back({p.a(i, 0), p.a(i, 1), p.b[i]});
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});
  double best = -1e300;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double det = lines[i][0] * lines[j][1] - lines[i][1] * lines[j][0];
      if (std::abs(det) < 1e-12) continue;
      const double x = (lines[i][2] * lines[j][1] - lines[i][1] * lines[j][2]) / det;
      const double y = (lines[i][0] * lines[j][2] - lines[i][2] * lines[j][0]) / det;
      bool ok = x >= -1e-9 && y >= -1e-9;
      for (std::size_t k = 0; k < p.b.size() && ok; ++k) ok = p.a(k, 0) * x + p.a(k, 1) * y <= p.b[k] + 1e-9;
      if (ok) best = std::max(best, p.c[0] * x + p.c[1] * y);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("textbook problem with known duals") {
  const auto s = lp::maximize(problem({{1, 0}, {0, 2}, {3, 2}}, {4, 12, 18}, {3, 5}));
  CHECK(s.objective == doctest::Approx(36.0));
  CHECK(s.x[0] == doctest::Approx(2.0));
  CHECK(s.x[1] == doctest::Approx(6.0));
  CHECK(s.duals[0] == doctest::Approx(0.0));
  CHECK(s.duals[1] == doctest::Approx(1.5));
  CHECK(s.duals[2] == doctest::Approx(1.0));
}

TEST_CASE("Beale's cycling example terminates at the optimum") {
  const auto s = lp::maximize(problem({{0.25, -60, -0.04, 9}, {0.5, -90, -0.02, 3}, {0, 0, 1, 0}}, {0, 0, 1},
                                      {0.75, -150, 0.02, -6}));
  CHECK(s.objective == doctest::Approx(0.05));
}

TEST_CASE("unbounded and invalid problems") {
  CHECK(error_of([] { lp::maximize(problem({{-1, 1}}, {1}, {1, 0})); }) == ErrorCode::Unbounded);
  CHECK(error_of([] { lp::maximize(problem({{1, 1}}, {-1}, {1, 1})); }) == ErrorCode::BadParameter);
}

TEST_CASE("random problems: vertex oracle and strong duality") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coef(0.0, 5.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2 + trial % 5;
    std::vector<std::vector<double>> a(m, std::vector<double>(2));
    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) {
      a[i] = {coef(rng) - 1.0, coef(rng)};
      b[i] = coef(rng);
    }
    a[0] = {1.0, 1.0};  // keeps the feasible region bounded
    const auto p = problem(a, b, {coef(rng), coef(rng)});
    const auto s = lp::maximize(p);
    CHECK(s.objective == doctest::Approx(vertex_oracle_2d(p)).epsilon(1e-9));
    double dual = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(s.duals[i] >= -1e-12);
      dual += s.duals[i] * b[i];
    }
    CHECK(dual == doctest::Approx(s.objective).epsilon(1e-9));
    for (std::size_t j = 0; j < 2; ++j) {
      double col = 0.0;
      for (std::size_t i = 0; i < m; ++i) col += s.duals[i] * p.a(i, j);
      CHECK(col >= p.c[j] - 1e-9);
    }
  }
}
