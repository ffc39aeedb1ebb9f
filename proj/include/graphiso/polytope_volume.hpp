#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphiso/int_linalg.hpp"
#include "graphiso/parallel.hpp"

namespace graphiso {

/// The centrally symmetric polytope { x in R^dim : sum_j weight_j |row_j . x| <= 1 }
/// with integer rows. Bounded exactly when the rows span R^dim.
struct L1Section {
  int dim = 0;
  std::vector<intla::IntRow> rows;
  std::vector<double> weights;

  double norm(std::span<const double> x) const;
};

/// Drops zero rows and merges rows that are integer multiples of a common
/// primitive row, adding the weights with the multiplier absorbed.
L1Section canonical_section(int dim, const std::vector<intla::IntRow>& rows, std::span<const double> weights);

struct ExactVolume {
  double volume = 0.0;
  std::size_t rays = 0;
  std::size_t regions = 0;
  std::size_t simplices = 0;
};

/// Exact volume by decomposition along the central hyperplane arrangement
/// of the rows. Each region is a pointed cone on which the norm is linear;
/// its part of the polytope is the cone truncated at norm 1, triangulated
/// by pulling from its lowest ray, and each simplex contributes
/// |det(rays)| / (dim! * prod norm(ray)) with the determinant computed in
/// exact integer arithmetic. Regions are independent work items.
/// Throws BadParameter when the rows do not span R^dim.
ExactVolume exact_volume(const L1Section& section, Exec exec = Exec::parallel);

/// Half-widths of the axis-aligned bounding box, one linear program per
/// coordinate (maximize x_i over the polytope).
std::vector<double> coordinate_extents(const L1Section& section);

struct McCount {
  std::uint64_t inside = 0;
  std::uint64_t total = 0;
};

inline constexpr int kMcShards = 64;

/// Uniform samples in the box prod [-h_i, h_i], counted against the
/// polytope. Work is split into a fixed number of shards with seeds derived
/// from `seed`, so the count does not depend on the thread count.
McCount mc_count(const L1Section& section, std::span<const double> half_widths, std::uint64_t samples,
                 std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace graphiso
