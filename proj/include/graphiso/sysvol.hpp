#pragma once

#include <vector>

#include "graphiso/cycles.hpp"
#include "graphiso/graph.hpp"
#include "graphiso/report.hpp"

namespace graphiso {

/// Cycle constraints l_w(gamma) >= 1 collected during a solve.
struct CutPool {
  std::vector<std::vector<long>> incidence;  // traversal count per edge, >= 0
  std::vector<CycleWitness> cycles;
  std::vector<double> duals;  // from the last LP solve

  /// Adds the cycle unless an identical constraint is present. Returns true if added.
  bool add(const CycleWitness& c);
};

struct SysvolResult {
  double sigma = 0.0;
  std::vector<double> weights;
  std::vector<CycleWitness> active_cycles;  // constraints with a positive dual
  double final_systole = 0.0;               // independent systole of the returned weights
  double lp_objective = 0.0;
  double dual_objective = 0.0;              // sum of duals; equals lp_objective at optimality
  long rounds = 0;
  std::size_t pool_size = 0;
};

/// Systolic constant inf_w Vol/sys by cutting planes: minimize sum w
/// subject to l_w(gamma) >= 1 over a growing pool of cycles, w >= 0. The
/// pool starts with a shortest unit-weight cycle through each edge; each round adds the current
/// systolic cycle until the systole reaches 1 - tolerance. Throws
/// NotConnected, NoCycle, IterationBudgetExceeded (10^4 cuts).
SysvolResult optimize_systolic_volume(const WeightedMultigraph& g, double tolerance = 1e-7);

/// (3 ln 2 / 2)(b-1)/(ln(b-1) + ln ln(b-1) + 4 ln 2 - ln ln 2), evaluated in
/// base 2 so that the ln ln 2 terms cancel exactly. Throws OutOfDomain for b < 3.
double bs_lower_bound(long b);

/// 8 ln 2 * b / ln b, the value reached by known near-optimal constructions.
double reference_upper_value(long b);

/// Checks bs_lower_bound(b) <= sigma. Throws OutOfDomain when b < 3.
InequalityReport check_bs(const WeightedMultigraph& g, double tolerance = 1e-7);
InequalityReport check_bs(const WeightedMultigraph& g, const SysvolResult& solved, double tolerance = 1e-7);

}  // namespace graphiso
