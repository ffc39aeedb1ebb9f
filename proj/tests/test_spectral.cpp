#include <cmath>

#include "doctest.h"
#include "graphiso/spectral.hpp"
#include "support.hpp"

using namespace graphiso;
using testing::error_of;

namespace {

DenseMatrix dense(std::vector<std::vector<double>> rows) {
  DenseMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("closed-form spectral radii") {
  CHECK(spectral_radius(dense({{2.0}})).rho == doctest::Approx(2.0));
  // Fibonacci matrix: golden ratio.
  CHECK(spectral_radius(dense({{1, 1}, {1, 0}})).rho == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  // Periodic (bipartite) matrix: the shift makes power iteration converge.
  CHECK(spectral_radius(dense({{0, 4}, {1, 0}})).rho == doctest::Approx(2.0).epsilon(1e-12));
  // Reducible with a dominant block.
  CHECK(spectral_radius(dense({{1, 1, 0}, {0, 3, 0}, {0, 1, 2}})).rho == doctest::Approx(3.0).epsilon(1e-12));
  // Nilpotent.
  CHECK(spectral_radius(dense({{0, 1}, {0, 0}})).rho == doctest::Approx(0.0));
}

TEST_CASE("bounds bracket the radius") {
  const auto r = spectral_radius(dense({{1, 2, 0}, {0, 1, 3}, {1, 0, 1}}));
  CHECK(r.lower <= r.rho);
  CHECK(r.rho <= r.upper);
  CHECK(r.upper - r.lower < 1e-9);
  CHECK(r.certified);
}

TEST_CASE("sparse and dense agree") {
  const auto m = dense({{0, 1, 1, 0}, {1, 0, 0, 1}, {0.5, 0, 0, 2}, {1, 1, 0, 0}});
  CHECK(spectral_radius(to_sparse(m)).rho == doctest::Approx(spectral_radius(m).rho).epsilon(1e-12));
}

TEST_CASE("separation stops early on the right side") {
  PowerIterationOptions opts;
  opts.separate_from = 1.0;
  const auto r = spectral_radius(dense({{1, 1}, {1, 0}}), opts);
  CHECK(r.lower > 1.0);
}

TEST_CASE("input errors") {
  CHECK(error_of([] { spectral_radius(DenseMatrix(2, 3)); }) == ErrorCode::NonSquare);
  CHECK(error_of([] { spectral_radius(dense({{1, -1}, {0, 1}})); }) == ErrorCode::NegativeEntry);
}
