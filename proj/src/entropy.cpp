#include "graphiso/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "graphiso/cycles.hpp"
#include "graphiso/error.hpp"

namespace graphiso {

DirectedEdgeSystem::DirectedEdgeSystem(const WeightedMultigraph& g)
    : tail_(2 * g.edge_count()), head_(2 * g.edge_count()), weight_(2 * g.edge_count()),
      leaving_(g.vertex_count()) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    tail_[2 * e] = head_[2 * e + 1] = ed.u;
    head_[2 * e] = tail_[2 * e + 1] = ed.v;
    weight_[2 * e] = weight_[2 * e + 1] = ed.w;
    leaving_[ed.u].push_back(2 * e);
    leaving_[ed.v].push_back(2 * e + 1);
  }
}

SparseMatrix transfer_matrix(const DirectedEdgeSystem& des, double h) {
  SparseMatrix m;
  m.n = des.size();
  m.row_start.reserve(m.n + 1);
  m.row_start.push_back(0);
  for (std::size_t d = 0; d < m.n; ++d) {
    for (std::size_t next : des.leaving(des.head(d))) {
      if (next == DirectedEdgeSystem::reverse(d)) continue;
      m.col.push_back(next);
      m.value.push_back(std::exp(-h * des.weight(next)));
    }
    m.row_start.push_back(m.col.size());
  }
  return m;
}

double volume_entropy(const WeightedMultigraph& g) {
  require_connected(g);
  if (betti_number(g) <= 1) return 0.0;

  const auto core = two_core(g);
  const DirectedEdgeSystem des(core);
  const int max_valence = valence_profile(core).max;
  const double w_min = c_min_literal(core);

  PowerIterationOptions opts;
  opts.tolerance = 1e-13;
  opts.separate_from = 1.0;
  auto above_one = [&](double h) {
    const auto r = spectral_radius(transfer_matrix(des, h), opts);
    return r.lower > 1.0 || (r.upper >= 1.0 && r.rho > 1.0);
  };

  // At h = ln(2*Delta)/w_min every entry is at most 1/(2*Delta) and each
  // row has fewer than Delta entries, so every row sum is below 1/2 and
  // rho < 1. At h = 0 a connected 2-core with b >= 2 is not a cycle, so
  // some vertex branches and the non-backtracking count grows: rho > 1.
  double lo = 0.0;
  double hi = std::log(2.0 * max_valence) / w_min;
  if (!above_one(lo)) throw std::logic_error("volume_entropy: rho(T(0)) <= 1 with b >= 2");
  for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (above_one(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double cover_ball_volume(const WeightedMultigraph& g, std::size_t base, double radius,
                         const CoverBallOptions& opts) {
  require_connected(g);
  if (base >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "base vertex out of range");
  if (!(radius >= 0.0) || !std::isfinite(radius)) throw Error(ErrorCode::BadParameter, "radius must be >= 0");

  const DirectedEdgeSystem des(g);
  // (remaining budget, oriented edge) -> number of lifts; processed from
  // the largest budget down so that all merges happen before expansion.
  std::map<std::pair<double, std::size_t>, double, std::greater<>> frontier;
  for (std::size_t d : des.leaving(base)) frontier[{radius, d}] += 1.0;

  double total = 0.0;
  long processed = 0;
  while (!frontier.empty()) {
    auto node = frontier.extract(frontier.begin());
    const auto [budget, d] = node.key();
    const double count = node.mapped();
    if (++processed > opts.frontier_budget) {
      throw Error(ErrorCode::FrontierBudgetExceeded, "more than " + std::to_string(opts.frontier_budget) +
                                                         " frontier items");
    }
    const double w = des.weight(d);
    if (budget <= w) {
      total += count * budget;
      continue;
    }
    total += count * w;
    const double rest = budget - w;
    for (std::size_t next : des.leaving(des.head(d))) {
      if (next != DirectedEdgeSystem::reverse(d)) frontier[{rest, next}] += count;
    }
  }
  return total;
}

EntropyEstimate entropy_estimate(const WeightedMultigraph& g, std::size_t base, double r_max,
                                 const CoverBallOptions& opts) {
  if (!(r_max > 0.0)) throw Error(ErrorCode::BadParameter, "r_max must be positive");
  EntropyEstimate est;
  est.degenerate = betti_number(g) <= 1;
  constexpr int kSamples = 20;
  for (int i = 0; i < kSamples; ++i) {
    const double r = 0.5 * r_max + (0.5 * r_max) * i / (kSamples - 1);
    const double vol = cover_ball_volume(g, base, r, opts);
    if (vol <= 0.0) {
      est.degenerate = true;
      continue;
    }
    est.radii.push_back(r);
    est.log_volume.push_back(std::log(vol));
  }
  const std::size_t n = est.radii.size();
  if (n < 2) return est;
  const double mean_r = std::accumulate(est.radii.begin(), est.radii.end(), 0.0) / n;
  const double mean_l = std::accumulate(est.log_volume.begin(), est.log_volume.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (est.radii[i] - mean_r) * (est.log_volume[i] - mean_l);
    sxx += (est.radii[i] - mean_r) * (est.radii[i] - mean_r);
  }
  est.slope = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fit = mean_l + est.slope * (est.radii[i] - mean_r);
    ss += (est.log_volume[i] - fit) * (est.log_volume[i] - fit);
  }
  est.residual = std::sqrt(ss / n);
  return est;
}

long free_group_growth_bound(long b) { return 2 * b - 1; }

std::vector<InequalityReport> check_entropy_inequalities(const WeightedMultigraph& g) {
  require_connected(g);
  const long b = betti_number(g);
  std::vector<InequalityReport> out;

  const std::string thm1 = "h_vol * sys <= 2 ln(8 b^3 - 1)";
  const std::string prop1 = "h_vol * sys <= 3 ln b (unit weights, regular)";
  const std::string lemma2 = "sys <= 3 ln b / ln(v - 1) (unit weights, v-regular, b > 1, sys > 1)";
  const std::string prop2_lo = "ln(delta - 1) <= h_vol (unit weights, delta >= 2)";
  const std::string prop2_hi = "h_vol <= ln(Delta - 1) (unit weights, delta >= 2)";
  const std::string prop3 = "h_vol * sys >= ln(2b - 1) (systolic basis, homology-certified)";
  const std::string prop4_lo = "ln 2 / C_max <= h_vol (valence <= 3)";
  const std::string prop4_hi = "h_vol <= ln 2 / C_min (valence <= 3)";
  const std::string prop5 = "h_vol * C_min <= ln(2b - 1)";

  if (b < 1) {
    const std::string why = "b = 0: no cycle";
    out.push_back(skipped_inequality("thm1", thm1, Sense::upper, why));
    out.push_back(skipped_inequality("prop1", prop1, Sense::upper, why));
    out.push_back(skipped_inequality("lemma2", lemma2, Sense::upper, why));
    out.push_back(skipped_inequality("prop2.lower", prop2_lo, Sense::lower, why));
    out.push_back(skipped_inequality("prop2.upper", prop2_hi, Sense::upper, why));
    out.push_back(skipped_inequality("prop3", prop3, Sense::lower, why));
    for (const char* reading : {"literal", "maximal"}) {
      out.push_back(skipped_inequality(std::string("prop4.lower.") + reading, prop4_lo, Sense::lower, why));
      out.push_back(skipped_inequality(std::string("prop4.upper.") + reading, prop4_hi, Sense::upper, why));
    }
    out.push_back(skipped_inequality("prop5.literal", prop5, Sense::upper, why));
    out.push_back(skipped_inequality("prop5.maximal", prop5, Sense::upper, why));
    return out;
  }

  const double h = volume_entropy(g);
  const auto sys = systole(g);
  const auto profile = valence_profile(g);
  const bool unit = has_unit_weights(g);
  const bool regular = profile.min == profile.max;
  const double bd = static_cast<double>(b);

  out.push_back(evaluate_inequality("thm1", thm1, Sense::upper, h * sys.length, 2.0 * std::log(8.0 * bd * bd * bd - 1.0)));
  out.back().witnesses = {{"systole", to_json(g, sys.witness)}};

  if (unit && regular) {
    out.push_back(evaluate_inequality("prop1", prop1, Sense::upper, h * sys.length, 3.0 * std::log(bd)));
  } else {
    out.push_back(skipped_inequality("prop1", prop1, Sense::upper, unit ? "graph is not regular" : "weights are not all 1"));
  }

  if (unit && regular && b > 1 && sys.length > 1.0) {
    out.push_back(evaluate_inequality("lemma2", lemma2, Sense::upper, sys.length,
                                      3.0 * std::log(bd) / std::log(profile.max - 1.0)));
  } else {
    std::string why = !unit ? "weights are not all 1" : !regular ? "graph is not regular" : b <= 1 ? "b <= 1" : "sys <= 1";
    out.push_back(skipped_inequality("lemma2", lemma2, Sense::upper, why));
  }

  if (unit && profile.min >= 2) {
    out.push_back(evaluate_inequality("prop2.lower", prop2_lo, Sense::lower, h, std::log(profile.min - 1.0)));
    out.push_back(evaluate_inequality("prop2.upper", prop2_hi, Sense::upper, h, std::log(profile.max - 1.0)));
  } else {
    const std::string why = unit ? "a vertex has valence < 2" : "weights are not all 1";
    out.push_back(skipped_inequality("prop2.lower", prop2_lo, Sense::lower, why));
    out.push_back(skipped_inequality("prop2.upper", prop2_hi, Sense::upper, why));
  }

  const auto basis = detect_systolic_basis(g);
  if (basis.status == BasisStatus::found) {
    out.push_back(evaluate_inequality("prop3", prop3, Sense::lower, h * sys.length,
                                      std::log(static_cast<double>(free_group_growth_bound(b)))));
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& c : basis.cycles) cycles.push_back(to_json(g, c));
    out.back().witnesses = {{"base_vertex", g.vertex_id(basis.base_vertex)},
                            {"certificate", "homology-rank"},
                            {"cycles", cycles}};
  } else {
    out.push_back(skipped_inequality("prop3", prop3, Sense::lower,
                                     std::string("systolic basis ") + std::string(to_string(basis.status))));
  }

  const double cmax = c_max(g);
  const double cmin_lit = c_min_literal(g);
  const double cmin_max = c_min_maximal(g);
  const bool trivalent = profile.max <= 3 && profile.min >= 2 && b >= 2;
  for (const auto& [reading, cmin] : {std::pair{"literal", cmin_lit}, std::pair{"maximal", cmin_max}}) {
    const std::string lo_name = std::string("prop4.lower.") + reading;
    const std::string hi_name = std::string("prop4.upper.") + reading;
    if (trivalent) {
      out.push_back(evaluate_inequality(lo_name, prop4_lo, Sense::lower, h, std::log(2.0) / cmax));
      out.push_back(evaluate_inequality(hi_name, prop4_hi, Sense::upper, h, std::log(2.0) / cmin));
    } else {
      const std::string why = profile.max > 3 ? "a vertex has valence > 3"
                              : b < 2         ? "b < 2 (pure circle degeneracy)"
                                              : "a vertex has valence 1";
      out.push_back(skipped_inequality(lo_name, prop4_lo, Sense::lower, why));
      out.push_back(skipped_inequality(hi_name, prop4_hi, Sense::upper, why));
    }
  }

  const double growth = std::log(static_cast<double>(free_group_growth_bound(b)));
  out.push_back(evaluate_inequality("prop5.literal", prop5, Sense::upper, h * cmin_lit, growth));
  out.push_back(evaluate_inequality("prop5.maximal", prop5, Sense::upper, h * cmin_max, growth));
  return out;
}

}  // namespace graphiso
