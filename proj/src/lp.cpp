#include "graphiso/lp.hpp"

#include <cmath>
#include <limits>

#include "graphiso/error.hpp"

namespace graphiso::lp {

Solution maximize(const Problem& p, long max_pivots) {
  const std::size_t m = p.a.rows;
  const std::size_t n = p.a.cols;
  if (p.b.size() != m || p.c.size() != n) throw Error(ErrorCode::BadParameter, "LP dimensions disagree");
  for (double v : p.b) {
    if (v < 0.0) throw Error(ErrorCode::BadParameter, "LP right-hand side must be >= 0");
  }

  constexpr double eps = 1e-11;
  const std::size_t width = n + m + 1;  // structural, slack, rhs
  std::vector<double> t((m + 1) * width, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return t[i * width + j]; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = p.a(i, j);
    at(i, n + i) = 1.0;
    at(i, width - 1) = p.b[i];
  }
  for (std::size_t j = 0; j < n; ++j) at(m, j) = -p.c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  Solution sol;
  int degenerate_run = 0;
  for (;;) {
    const bool bland = degenerate_run > 50;
    std::size_t enter = width;
    double best = -eps;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (at(m, j) < best) {
        enter = j;
        if (bland) break;
        best = at(m, j);
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    double ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double coef = at(i, enter);
      if (coef <= eps) continue;
      const double r = at(i, width - 1) / coef;
      if (r < ratio - 1e-14 || (r <= ratio + 1e-14 && leave < m && basis[i] < basis[leave])) {
        ratio = r;
        leave = i;
      }
    }
    if (leave == m) throw Error(ErrorCode::Unbounded, "LP objective is unbounded");
    if (++sol.pivots > max_pivots) throw Error(ErrorCode::IterationBudgetExceeded, "simplex pivot budget exhausted");
    degenerate_run = ratio <= eps ? degenerate_run + 1 : 0;

    const double piv = at(leave, enter);
    for (std::size_t j = 0; j < width; ++j) at(leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = at(i, enter);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) at(i, j) -= f * at(leave, j);
      at(i, enter) = 0.0;
    }
    basis[leave] = enter;
  }

  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.x[basis[i]] = at(i, width - 1);
  }
  sol.duals.resize(m);
  for (std::size_t i = 0; i < m; ++i) sol.duals[i] = std::max(0.0, at(m, n + i));
  sol.objective = at(m, width - 1);
  return sol;
}

}  // namespace graphiso::lp
