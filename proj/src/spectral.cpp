#include "graphiso/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "graphiso/error.hpp"

namespace graphiso {

SparseMatrix to_sparse(const DenseMatrix& m) {
  SparseMatrix s;
  s.n = m.rows;
  s.row_start.push_back(0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (m(i, j) != 0.0) {
        s.col.push_back(j);
        s.value.push_back(m(i, j));
      }
    }
    s.row_start.push_back(s.col.size());
  }
  return s;
}

namespace {

void validate(const SparseMatrix& m) {
  for (double v : m.value) {
    if (v < 0.0 || !std::isfinite(v)) throw Error(ErrorCode::NegativeEntry, "matrix entry " + std::to_string(v));
  }
}

// Power iteration on an irreducible block. The shift by I makes the block
// primitive, so the Collatz-Wielandt bounds close geometrically.
SpectralResult power_iterate(const SparseMatrix& m, const PowerIterationOptions& opts) {
  const std::size_t n = m.n;
  SpectralResult res;
  std::vector<double> x(n, 1.0 / static_cast<double>(n)), y(n);
  double prev_ratio = -1.0;
  int stationary = 0;
  for (long it = 1; it <= opts.max_iterations; ++it) {
    // y = (M + I) x, accumulated in fixed index order
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = x[i];
      for (std::size_t k = m.row_start[i]; k < m.row_start[i + 1]; ++k) acc += m.value[k] * x[m.col[k]];
      y[i] = acc;
      norm += acc;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    const double ratio = norm;  // ||x||_1 == 1
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;

    res.lower = lo - 1.0;
    res.upper = hi - 1.0;
    res.iterations = it;
    if (hi - lo <= opts.tolerance * hi) {
      res.rho = 0.5 * (res.lower + res.upper);
      res.certified = true;
      return res;
    }
    if (opts.separate_from && (res.lower > *opts.separate_from || res.upper < *opts.separate_from)) {
      res.rho = std::clamp(ratio - 1.0, res.lower, res.upper);
      return res;
    }
    // Rounding can keep the bounds a few ulps apart; accept a ratio that no
    // longer moves.
    if (std::abs(ratio - prev_ratio) <= 1e-15 * ratio) {
      if (++stationary >= 50) {
        res.rho = std::clamp(ratio - 1.0, res.lower, res.upper);
        res.certified = true;
        return res;
      }
    } else {
      stationary = 0;
    }
    prev_ratio = ratio;
  }
  throw Error(ErrorCode::NoConvergence, "power iteration budget exhausted");
}

// Strongly connected components (iterative Tarjan), each as a list of
// vertices.
std::vector<std::vector<std::size_t>> strong_components(const SparseMatrix& m) {
  const std::size_t n = m.n;
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, none), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // vertex, next edge slot
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != none) continue;
    call.push_back({root, m.row_start[root]});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, k] = call.back();
      if (k < m.row_start[v + 1]) {
        const std::size_t w = m.col[k++];
        if (index[w] == none) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, m.row_start[w]});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        auto& comp = out.emplace_back();
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
      }
    }
  }
  return out;
}

SparseMatrix restrict_to(const SparseMatrix& m, const std::vector<std::size_t>& vertices) {
  std::vector<std::size_t> local(m.n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  SparseMatrix s;
  s.n = vertices.size();
  s.row_start.push_back(0);
  for (std::size_t v : vertices) {
    for (std::size_t k = m.row_start[v]; k < m.row_start[v + 1]; ++k) {
      if (local[m.col[k]] == std::numeric_limits<std::size_t>::max() || m.value[k] == 0.0) continue;
      s.col.push_back(local[m.col[k]]);
      s.value.push_back(m.value[k]);
    }
    s.row_start.push_back(s.col.size());
  }
  return s;
}

SpectralResult radius_by_blocks(const SparseMatrix& m, const PowerIterationOptions& opts) {
  SpectralResult res;
  res.certified = true;
  const auto comps = strong_components(m);
  if (comps.size() == 1 && m.n > 1) return power_iterate(m, opts);
  for (const auto& comp : comps) {
    const auto block = restrict_to(m, comp);
    if (block.col.empty()) continue;  // acyclic singleton: contributes 0
    const auto r = power_iterate(block, opts);
    res.iterations += r.iterations;
    res.certified = res.certified && r.certified;
    res.lower = std::max(res.lower, r.lower);
    res.upper = std::max(res.upper, r.upper);
    res.rho = std::max(res.rho, r.rho);
    if (opts.separate_from && res.lower > *opts.separate_from) break;
  }
  return res;
}

}  // namespace

SpectralResult spectral_radius(const SparseMatrix& m, const PowerIterationOptions& opts) {
  validate(m);
  return radius_by_blocks(m, opts);
}

SpectralResult spectral_radius(const DenseMatrix& m, const PowerIterationOptions& opts) {
  if (m.rows != m.cols) {
    throw Error(ErrorCode::NonSquare, std::to_string(m.rows) + "x" + std::to_string(m.cols));
  }
  for (double v : m.data) {
    if (v < 0.0 || !std::isfinite(v)) throw Error(ErrorCode::NegativeEntry, "matrix entry " + std::to_string(v));
  }
  return radius_by_blocks(to_sparse(m), opts);
}

}  // namespace graphiso
