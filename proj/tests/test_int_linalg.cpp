#include <random>

#include "doctest.h"
#include "graphiso/int_linalg.hpp"

using namespace graphiso;
using intla::IntRow;

namespace {

// Cofactor expansion, exponential but independent of the elimination code.
long long cofactor_det(const std::vector<IntRow>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<IntRow> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntRow row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const long long sign = c % 2 == 0 ? 1 : -1;
    total += sign * m[0][c] * cofactor_det(minor);
  }
  return total;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<IntRow> m(static_cast<std::size_t>(n), IntRow(static_cast<std::size_t>(n)));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    CHECK(static_cast<long long>(intla::determinant(m)) == cofactor_det(m));
  }
}

TEST_CASE("determinant handles zero pivots and singular input") {
  CHECK(static_cast<long long>(intla::determinant({{0, 1}, {1, 0}})) == -1);
  CHECK(static_cast<long long>(intla::determinant({{1, 2}, {2, 4}})) == 0);
  CHECK(static_cast<long long>(intla::determinant({{0, 0, 1}, {0, 2, 0}, {3, 0, 0}})) == -6);
}

TEST_CASE("rank") {
  CHECK(intla::rank({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) == 2);
  CHECK(intla::rank({{0, 0}}) == 0);
  CHECK(intla::rank({}) == 0);
  CHECK(intla::rank({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}) == 2);
}

TEST_CASE("null vector is orthogonal, primitive and sign-normalized") {
  const auto v = intla::null_vector({{1, 1, 0}, {0, 2, 2}}, 3);
  CHECK(v == IntRow{1, -1, 1});
  CHECK(intla::dot(v, {1, 1, 0}) == 0);
  const auto zero = intla::null_vector({{1, 2, 3}, {2, 4, 6}}, 3);
  CHECK(zero == IntRow{0, 0, 0});

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + trial % 4;
    std::vector<IntRow> rows(static_cast<std::size_t>(k - 1), IntRow(static_cast<std::size_t>(k)));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    const auto nv = intla::null_vector(rows, k);
    for (const auto& row : rows) CHECK(intla::dot(row, nv) == 0);
    const bool independent = intla::rank(rows) == k - 1;
    const bool nonzero = std::any_of(nv.begin(), nv.end(), [](long long x) { return x != 0; });
    CHECK(independent == nonzero);
  }
}

TEST_CASE("make_primitive") {
  IntRow v{0, -4, 6};
  CHECK(intla::make_primitive(v) == -2);
  CHECK(v == IntRow{0, 2, -3});
  IntRow z{0, 0};
  CHECK(intla::make_primitive(z) == 0);
}
