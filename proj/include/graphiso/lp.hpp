#pragma once

#include <vector>

#include "graphiso/spectral.hpp"

namespace graphiso::lp {

/// maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0 so the
/// origin is feasible and no phase one is needed.
struct Problem {
  DenseMatrix a;
  std::vector<double> b;
  std::vector<double> c;
};

struct Solution {
  std::vector<double> x;
  std::vector<double> duals;  // one per row of A, >= 0
  double objective = 0.0;
  long pivots = 0;
};

/// Dense tableau simplex. Dantzig pricing, switching to Bland's rule after a
/// run of degenerate pivots. Throws BadParameter (negative b), Unbounded,
/// IterationBudgetExceeded.
Solution maximize(const Problem& p, long max_pivots = 200000);

}  // namespace graphiso::lp
