#include "graphiso/sysvol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "graphiso/error.hpp"
#include "graphiso/lp.hpp"

namespace graphiso {

bool CutPool::add(const CycleWitness& c) {
  std::vector<long> counts(c.homology.size(), 0);
  for (const auto& step : c.walk) counts[step.edge] += 1;
  if (std::find(incidence.begin(), incidence.end(), counts) != incidence.end()) return false;
  incidence.push_back(std::move(counts));
  cycles.push_back(c);
  return true;
}

namespace {

// The LP is solved in its dual form,
//   max sum y  s.t.  sum_gamma count_gamma(e) y_gamma <= 1,  y >= 0,
// whose origin is feasible; the weights are the dual prices of its rows.
lp::Solution solve_pool(const CutPool& pool, std::size_t edges) {
  lp::Problem p;
  p.a = DenseMatrix(edges, pool.incidence.size());
  for (std::size_t c = 0; c < pool.incidence.size(); ++c)
    for (std::size_t e = 0; e < edges; ++e) p.a(e, c) = static_cast<double>(pool.incidence[c][e]);
  p.b.assign(edges, 1.0);
  p.c.assign(pool.incidence.size(), 1.0);
  return lp::maximize(p);
}

}  // namespace

SysvolResult optimize_systolic_volume(const WeightedMultigraph& g, double tolerance) {
  require_connected(g);
  if (betti_number(g) < 1) throw Error(ErrorCode::NoCycle, "graph is a tree");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::BadParameter, "tolerance must be positive");

  const auto unit = std::vector<double>(g.edge_count(), 1.0);
  CutPool pool;
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (auto c = shortest_cycle_through_edge(g, unit, e, inf)) pool.add(*c);
  }

  constexpr long kMaxCuts = 10000;
  SysvolResult res;
  for (;;) {
    ++res.rounds;
    const auto sol = solve_pool(pool, g.edge_count());
    std::vector<double> w = sol.duals;
    const auto sep = systole(g, w);
    res.lp_objective = std::accumulate(w.begin(), w.end(), 0.0);
    res.dual_objective = sol.objective;
    pool.duals = sol.x;
    if (sep.length >= 1.0 - tolerance) {
      res.weights = std::move(w);
      res.final_systole = sep.length;
      break;
    }
    if (static_cast<long>(pool.incidence.size()) >= kMaxCuts) {
      throw Error(ErrorCode::IterationBudgetExceeded, "cut pool reached " + std::to_string(kMaxCuts));
    }
    if (!pool.add(make_witness(g, unit, sep.witness.walk))) {
      throw Error(ErrorCode::NoConvergence, "separation returned a cycle already in the pool");
    }
  }

  res.sigma = res.lp_objective;
  res.pool_size = pool.incidence.size();
  for (std::size_t c = 0; c < pool.cycles.size(); ++c) {
    if (pool.duals[c] > 1e-12) res.active_cycles.push_back(make_witness(g, res.weights, pool.cycles[c].walk));
  }
  return res;
}

double bs_lower_bound(long b) {
  if (b < 3) throw Error(ErrorCode::OutOfDomain, "bound needs b >= 3, got " + std::to_string(b));
  const double l = std::log2(static_cast<double>(b - 1));
  return 1.5 * static_cast<double>(b - 1) / (l + std::log2(l) + 4.0);
}

double reference_upper_value(long b) {
  return 8.0 * std::log(2.0) * static_cast<double>(b) / std::log(static_cast<double>(b));
}

InequalityReport check_bs(const WeightedMultigraph& g, const SysvolResult& solved, double tolerance) {
  const long b = betti_number(g);
  const double bound = bs_lower_bound(b);
  auto r = evaluate_inequality("bs", "sigma >= (3 ln 2 / 2)(b-1)/(ln(b-1) + ln ln(b-1) + 4 ln 2 - ln ln 2)",
                               Sense::lower, solved.sigma, bound, std::max(tolerance, kInequalityTolerance));
  r.witnesses = {{"reference_construction_value", real_json(reference_upper_value(b))},
                 {"asymptotic_lower_rate", real_json(1.5 * std::log(2.0) * b / std::log(static_cast<double>(b)))}};
  return r;
}

InequalityReport check_bs(const WeightedMultigraph& g, double tolerance) {
  require_connected(g);
  const long b = betti_number(g);
  bs_lower_bound(b);
  return check_bs(g, optimize_systolic_volume(g, tolerance), tolerance);
}

}  // namespace graphiso
