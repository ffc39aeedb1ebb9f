#pragma once

#include <cstddef>
#include <vector>

#include "graphiso/graph.hpp"
#include "graphiso/report.hpp"
#include "graphiso/spectral.hpp"

namespace graphiso {

/// The 2|E| oriented edges of a graph. Oriented edge 2e runs along the
/// stored (u,v) order of edge e, 2e+1 runs against it.
class DirectedEdgeSystem {
public:
  explicit DirectedEdgeSystem(const WeightedMultigraph& g);

  std::size_t size() const noexcept { return tail_.size(); }
  std::size_t tail(std::size_t d) const { return tail_[d]; }
  std::size_t head(std::size_t d) const { return head_[d]; }
  static std::size_t reverse(std::size_t d) noexcept { return d ^ 1u; }
  double weight(std::size_t d) const { return weight_[d]; }
  /// Oriented edges leaving vertex v, in edge order.
  const std::vector<std::size_t>& leaving(std::size_t v) const { return leaving_[v]; }

private:
  std::vector<std::size_t> tail_, head_;
  std::vector<double> weight_;
  std::vector<std::vector<std::size_t>> leaving_;
};

/// Non-backtracking transfer matrix: entry (d, d') = exp(-h w(d')) when d'
/// leaves head(d) and d' != reverse(d).
SparseMatrix transfer_matrix(const DirectedEdgeSystem& des, double h);

/// Exact volume entropy: 0 when b <= 1, otherwise the root of
/// rho(T(h)) = 1, bracketed on [0, ln(2*Delta)/w_min] and bisected to
/// 1e-12. Computed on the 2-core, which has the same universal-cover
/// growth. Throws NotConnected.
double volume_entropy(const WeightedMultigraph& g);

struct CoverBallOptions {
  long frontier_budget = 100000000;
};

/// Length measure of the radius-R ball around a lift of `base` in the
/// universal cover. Oriented edges with equal remaining budget are merged,
/// so unit-weight graphs stay polynomial in R. Throws NotConnected,
/// BadParameter, FrontierBudgetExceeded.
double cover_ball_volume(const WeightedMultigraph& g, std::size_t base, double radius,
                         const CoverBallOptions& opts = {});

struct EntropyEstimate {
  double slope = 0.0;
  double residual = 0.0;  // RMS deviation of ln Vol from the fitted line
  bool degenerate = false;
  std::vector<double> radii;
  std::vector<double> log_volume;
};

/// Least-squares slope of ln Vol B(R) over 20 radii evenly spaced on
/// [R_max/2, R_max]. Flagged degenerate when b <= 1 (the growth is not
/// exponential) or when the ball has no volume.
EntropyEstimate entropy_estimate(const WeightedMultigraph& g, std::size_t base, double r_max,
                                 const CoverBallOptions& opts = {});

/// Growth bound of a free group for a free basis of size b: 2b - 1.
long free_group_growth_bound(long b);

/// Entropy bounds in terms of systole, valence, chain scales and Betti
/// number, each behind its applicability gate. Throws NotConnected.
std::vector<InequalityReport> check_entropy_inequalities(const WeightedMultigraph& g);

}  // namespace graphiso
