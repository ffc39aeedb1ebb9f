#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphiso/graph.hpp"
#include "graphiso/parallel.hpp"
#include "graphiso/polytope_volume.hpp"
#include "graphiso/report.hpp"
#include "graphiso/spectral.hpp"

namespace graphiso {

/// Real edge-space coordinates in the stored edge orientation.
using CycleVector = std::vector<double>;

/// Fundamental cycles of a BFS spanning tree rooted at vertex 0. Each cycle
/// runs its non-tree edge forward and returns along the tree.
struct CycleBasis {
  std::vector<std::vector<long>> cycles;
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> cotree_edges;  // cotree_edges[i] generates cycles[i]
};

/// Throws NotConnected.
CycleBasis cycle_basis(const WeightedMultigraph& g);

/// Largest absolute signed endpoint sum of u over the vertices.
double boundary_residual(const WeightedMultigraph& g, std::span<const double> u);

/// sum_e w_e |u_e|. Throws NotACycle when the boundary residual exceeds 1e-9.
double stable_norm(const WeightedMultigraph& g, std::span<const double> u);

/// G[i][j] = sum_e w_e c_i[e] c_j[e].
DenseMatrix gram_matrix(const WeightedMultigraph& g, const std::vector<std::vector<long>>& basis);

/// Determinant of a symmetric positive-definite matrix (Cholesky).
double spd_determinant(const DenseMatrix& m);

/// The stable unit ball written in basis coordinates.
L1Section stable_section(const WeightedMultigraph& g, const std::vector<std::vector<long>>& basis);

struct StableBallVolume {
  enum class Method { exact, monte_carlo };
  double value = 0.0;
  Method method = Method::exact;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;  // Monte Carlo samples inside the ball
  double ci99 = 0.0;
  bool degenerate = false;  // b = 0: measure of a point, reported as 1
};

inline constexpr long kExactMaxBetti = 8;
inline constexpr std::size_t kExactMaxEdges = 20;

/// Measure of the stable unit ball for the Haar measure induced by the
/// weighted scalar product: the polytope volume in basis coordinates times
/// sqrt(det Gram). Runs on smooth_chains(g); the size limits apply there.
/// Throws NotConnected, SizeLimitExceeded.
StableBallVolume stable_ball_volume_exact(const WeightedMultigraph& g, Exec exec = Exec::parallel);

/// Rejection sampling in the LP bounding box, with a 99% normal-approximation
/// confidence half-width. Throws NotConnected, ZeroBetti, DegenerateBox.
StableBallVolume stable_ball_volume_mc(const WeightedMultigraph& g, std::uint64_t samples, std::uint64_t seed,
                                       Exec exec = Exec::parallel);

/// Volume of the Euclidean unit ball in R^b.
double euclidean_ball_volume(int b);

struct StableCheckOptions {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  bool exact_only = false;
};

/// Stable-ball volume bounds: the unit-weight two-sided bound, the weighted
/// Euclidean-ball lower bound and, for regular graphs, the valence-dependent
/// lower bound (a finding, not an error, if it fails).
std::vector<InequalityReport> check_stable_inequalities(const WeightedMultigraph& g,
                                                        const StableCheckOptions& opts = {});

/// Same, reusing an already computed volume.
std::vector<InequalityReport> check_stable_inequalities(const WeightedMultigraph& g, const StableBallVolume& vol);

bool exact_volume_supported(const WeightedMultigraph& g);

std::string_view to_string(StableBallVolume::Method m);

}  // namespace graphiso
