#include "graphiso/stable_norm.hpp"

#include <cmath>
#include <deque>
#include <numbers>

#include "graphiso/error.hpp"

namespace graphiso {

CycleBasis cycle_basis(const WeightedMultigraph& g) {
  require_connected(g);
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0), is_tree(g.edge_count(), 0);
  // parent incidence of each vertex, as traversed from the parent
  std::vector<Incidence> up(n, Incidence{0, 0, true});
  std::vector<std::size_t> parent(n, 0), depth(n, 0);
  CycleBasis basis;

  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incidences(x)) {
      if (seen[inc.other]) continue;
      seen[inc.other] = 1;
      is_tree[inc.edge] = 1;
      up[inc.other] = inc;
      parent[inc.other] = x;
      depth[inc.other] = depth[x] + 1;
      basis.tree_edges.push_back(inc.edge);
      queue.push_back(inc.other);
    }
  }

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (is_tree[e]) continue;
    std::vector<long> c(g.edge_count(), 0);
    c[e] = 1;
    // Close the cycle with the tree path from v back to u.
    std::size_t a = g.edge(e).v, b = g.edge(e).u;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        c[up[a].edge] += up[a].forward ? -1 : 1;  // walk a -> parent(a), against the downward step
        a = parent[a];
      } else {
        c[up[b].edge] += up[b].forward ? 1 : -1;  // walk parent(b) -> b
        b = parent[b];
      }
    }
    basis.cycles.push_back(std::move(c));
    basis.cotree_edges.push_back(e);
  }
  return basis;
}

double boundary_residual(const WeightedMultigraph& g, std::span<const double> u) {
  std::vector<double> boundary(g.vertex_count(), 0.0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    boundary[g.edge(e).v] += u[e];
    boundary[g.edge(e).u] -= u[e];
  }
  double worst = 0.0;
  for (double b : boundary) worst = std::max(worst, std::abs(b));
  return worst;
}

double stable_norm(const WeightedMultigraph& g, std::span<const double> u) {
  if (u.size() != g.edge_count()) throw Error(ErrorCode::NotACycle, "vector has wrong length");
  if (boundary_residual(g, u) > 1e-9) throw Error(ErrorCode::NotACycle, "vector has nonzero boundary");
  double total = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) total += g.edge(e).w * std::abs(u[e]);
  return total;
}

DenseMatrix gram_matrix(const WeightedMultigraph& g, const std::vector<std::vector<long>>& basis) {
  const std::size_t b = basis.size();
  DenseMatrix m(b, b);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      double s = 0.0;
      for (std::size_t e = 0; e < g.edge_count(); ++e) s += g.edge(e).w * basis[i][e] * basis[j][e];
      m(i, j) = s;
    }
  }
  return m;
}

double spd_determinant(const DenseMatrix& m) {
  const std::size_t n = m.rows;
  DenseMatrix l(n, n);
  double det = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) throw Error(ErrorCode::BadParameter, "matrix is not positive definite");
    l(j, j) = std::sqrt(d);
    det *= d;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return det;
}

L1Section stable_section(const WeightedMultigraph& g, const std::vector<std::vector<long>>& basis) {
  const int b = static_cast<int>(basis.size());
  std::vector<intla::IntRow> rows(g.edge_count(), intla::IntRow(static_cast<std::size_t>(b)));
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    for (int i = 0; i < b; ++i) rows[e][static_cast<std::size_t>(i)] = basis[static_cast<std::size_t>(i)][e];
  const auto w = g.weights();
  return canonical_section(b, rows, w);
}

bool exact_volume_supported(const WeightedMultigraph& g) {
  return betti_number(g) <= kExactMaxBetti && smooth_chains(g).edge_count() <= kExactMaxEdges;
}

StableBallVolume stable_ball_volume_exact(const WeightedMultigraph& g, Exec exec) {
  require_connected(g);
  const long b = betti_number(g);
  StableBallVolume out;
  if (b == 0) {
    out.value = 1.0;
    out.degenerate = true;
    return out;
  }
  if (!exact_volume_supported(g)) {
    throw Error(ErrorCode::SizeLimitExceeded, "exact volume needs b <= " + std::to_string(kExactMaxBetti) +
                                                  " and |E| <= " + std::to_string(kExactMaxEdges) +
                                                  " after suppressing valence-2 vertices");
  }
  // Chains carry one coefficient per cycle, so the smoothed graph has the
  // same norm and Gram form with fewer LP rows.
  const auto s = smooth_chains(g);
  const auto basis = cycle_basis(s);
  const auto section = stable_section(s, basis.cycles);
  const double coords = exact_volume(section, exec).volume;
  out.value = coords * std::sqrt(spd_determinant(gram_matrix(s, basis.cycles)));
  return out;
}

StableBallVolume stable_ball_volume_mc(const WeightedMultigraph& g, std::uint64_t samples, std::uint64_t seed,
                                       Exec exec) {
  require_connected(g);
  if (betti_number(g) == 0) throw Error(ErrorCode::ZeroBetti, "no cycle space to sample");
  if (samples == 0) throw Error(ErrorCode::BadParameter, "need at least one sample");
  const auto basis = cycle_basis(g);
  const auto section = stable_section(g, basis.cycles);
  const auto extents = coordinate_extents(section);
  double box = 1.0;
  for (double h : extents) {
    if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::DegenerateBox, "bounding box has a zero side");
    box *= 2.0 * h;
  }
  const auto count = mc_count(section, extents, samples, seed, exec);
  const double scale = box * std::sqrt(spd_determinant(gram_matrix(g, basis.cycles)));
  const double n = static_cast<double>(count.total);
  const double p = static_cast<double>(count.inside) / n;
  constexpr double z99 = 2.5758293035489004;

  StableBallVolume out;
  out.method = StableBallVolume::Method::monte_carlo;
  out.samples = count.total;
  out.hits = count.inside;
  out.value = scale * p;
  // With no hits the normal approximation collapses; fall back to the
  // one-sided 99% bound -ln(0.01)/n.
  out.ci99 = count.inside == 0 ? scale * 4.605170185988091 / n : z99 * scale * std::sqrt(p * (1.0 - p) / n);
  return out;
}

double euclidean_ball_volume(int b) {
  return std::pow(std::numbers::pi, b / 2.0) / std::tgamma(b / 2.0 + 1.0);
}

std::string_view to_string(StableBallVolume::Method m) {
  return m == StableBallVolume::Method::exact ? "exact" : "monte-carlo";
}

namespace {

const std::string kThm2Lower = "(2^b/b!) (b/Vol)^b <= mu(B_st) (unit weights)";
const std::string kThm2Upper = "mu(B_st) <= 2^b/b! (unit weights)";
const std::string kThm3 = "mu_w(B_st) * Vol^(b/2) >= omega_b";
const std::string kRegular = "((v-2)/v)^b 2^b/b! <= mu(B_st) (unit weights, v-regular, v >= 3)";

void apply_ci(InequalityReport& r, double ci_on_left) {
  r.provenance = Provenance::mc;
  r.ci99 = ci_on_left;
  // Only a bound lying outside the confidence interval counts as a violation.
  r.holds = r.slack >= -ci_on_left - kInequalityTolerance * std::max(1.0, std::abs(r.right));
  r.equality = false;
}

}  // namespace

std::vector<InequalityReport> check_stable_inequalities(const WeightedMultigraph& g, const StableBallVolume& vol) {
  require_connected(g);
  const long b = betti_number(g);
  std::vector<InequalityReport> out;
  if (b < 1) {
    out.push_back(skipped_inequality("thm2.lower", kThm2Lower, Sense::lower, "b = 0"));
    out.push_back(skipped_inequality("thm2.upper", kThm2Upper, Sense::upper, "b = 0"));
    out.push_back(skipped_inequality("thm3", kThm3, Sense::lower, "b = 0"));
    out.push_back(skipped_inequality("regular.lower", kRegular, Sense::lower, "b = 0"));
    out.back().finding_only = true;
    return out;
  }
  const double bd = static_cast<double>(b);
  const double vol_graph = volume(g);
  const double cross = std::pow(2.0, bd) / std::tgamma(bd + 1.0);
  const bool mc = vol.method == StableBallVolume::Method::monte_carlo;
  const bool unit = has_unit_weights(g);
  const auto profile = valence_profile(g);

  auto finish = [&](InequalityReport r, double ci_scale) {
    if (mc) {
      apply_ci(r, vol.ci99 * ci_scale);
      // The hit count shows how informative the interval is.
      r.witnesses["mc_hits"] = vol.hits;
      r.witnesses["mc_samples"] = vol.samples;
    }
    out.push_back(std::move(r));
  };

  if (unit) {
    finish(evaluate_inequality("thm2.lower", kThm2Lower, Sense::lower, vol.value, cross * std::pow(bd / vol_graph, bd)), 1.0);
    finish(evaluate_inequality("thm2.upper", kThm2Upper, Sense::upper, vol.value, cross), 1.0);
  } else {
    out.push_back(skipped_inequality("thm2.lower", kThm2Lower, Sense::lower, "weights are not all 1"));
    out.push_back(skipped_inequality("thm2.upper", kThm2Upper, Sense::upper, "weights are not all 1"));
  }

  const double vol_factor = std::pow(vol_graph, bd / 2.0);
  finish(evaluate_inequality("thm3", kThm3, Sense::lower, vol.value * vol_factor, euclidean_ball_volume(static_cast<int>(b))),
         vol_factor);

  if (unit && profile.min == profile.max && profile.max >= 3) {
    const double v = profile.max;
    auto r = evaluate_inequality("regular.lower", kRegular, Sense::lower, vol.value, std::pow((v - 2.0) / v, bd) * cross);
    r.finding_only = true;
    finish(std::move(r), 1.0);
  } else {
    out.push_back(skipped_inequality("regular.lower", kRegular, Sense::lower,
                                     unit ? "graph is not regular of valence >= 3" : "weights are not all 1"));
    out.back().finding_only = true;
  }
  return out;
}

std::vector<InequalityReport> check_stable_inequalities(const WeightedMultigraph& g, const StableCheckOptions& opts) {
  require_connected(g);
  if (betti_number(g) < 1) return check_stable_inequalities(g, stable_ball_volume_exact(g));
  if (exact_volume_supported(g)) return check_stable_inequalities(g, stable_ball_volume_exact(g));
  if (opts.exact_only) {
    std::vector<InequalityReport> out;
    const std::string why = "exact volume size limit exceeded and --exact-only set";
    out.push_back(skipped_inequality("thm2.lower", kThm2Lower, Sense::lower, why));
    out.push_back(skipped_inequality("thm2.upper", kThm2Upper, Sense::upper, why));
    out.push_back(skipped_inequality("thm3", kThm3, Sense::lower, why));
    out.push_back(skipped_inequality("regular.lower", kRegular, Sense::lower, why));
    out.back().finding_only = true;
    return out;
  }
  return check_stable_inequalities(g, stable_ball_volume_mc(g, opts.samples, opts.seed));
}

}  // namespace graphiso
