#include "graphiso/subshift.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "graphiso/error.hpp"

namespace graphiso {

TransitionMatrix::TransitionMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::NonSquare, "matrix has no rows");
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw Error(ErrorCode::NonSquare, "matrix is not square");
    for (int x : r) {
      if (x != 0 && x != 1) throw Error(ErrorCode::BadParameter, "entries must be 0 or 1");
    }
  }
}

long TransitionMatrix::entry_sum() const {
  long s = 0;
  for (const auto& r : rows_) s += std::accumulate(r.begin(), r.end(), 0L);
  return s;
}

DenseMatrix TransitionMatrix::to_dense() const {
  DenseMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) m(i, j) = rows_[i][j];
  return m;
}

long minimal_period(const TransitionMatrix& a) {
  const std::size_t n = a.size();
  long best = std::numeric_limits<long>::max();
  for (std::size_t s = 0; s < n; ++s) {
    // BFS from s; the first edge back into s closes the shortest cycle through s.
    std::vector<long> dist(n, -1);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    bool closed = false;
    while (!queue.empty() && !closed) {
      const std::size_t x = queue.front();
      queue.pop_front();
      if (dist[x] + 1 >= best) break;
      for (std::size_t y = 0; y < n; ++y) {
        if (!a.at(x, y)) continue;
        if (y == s) {
          best = std::min(best, dist[x] + 1);
          closed = true;
          break;
        }
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  if (best == std::numeric_limits<long>::max()) throw Error(ErrorCode::EmptySubshift, "transition graph is acyclic");
  return best;
}

double topological_entropy(const TransitionMatrix& a) {
  minimal_period(a);  // raises EmptySubshift for acyclic matrices
  const double rho = spectral_radius(a.to_dense()).rho;
  // A binary matrix with a cycle has rho >= 1.
  return std::log(std::max(rho, 1.0));
}

unsigned __int128 count_admissible_words(const TransitionMatrix& a, int k) {
  const std::size_t n = a.size();
  if (k < 1) throw Error(ErrorCode::BadParameter, "word length must be >= 1");
  if (n > 12 || k > 30) throw Error(ErrorCode::OracleBudgetExceeded, "word counting limited to n <= 12, k <= 30");
  std::vector<unsigned __int128> ending(n, 1), next(n);
  for (int step = 1; step < k; ++step) {
    for (std::size_t j = 0; j < n; ++j) {
      unsigned __int128 s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (a.at(i, j)) s += ending[i];
      next[j] = s;
    }
    ending.swap(next);
  }
  unsigned __int128 total = 0;
  for (auto c : ending) total += c;
  return total;
}

long betti_bA(const TransitionMatrix& a) { return a.entry_sum() - static_cast<long>(a.size()) + 1; }

TransitionMatrix equality_family(int b) {
  if (b < 1) throw Error(ErrorCode::BadParameter, "equality family needs b >= 1");
  const std::size_t n = static_cast<std::size_t>(b) + 1;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (std::size_t j = 1; j < n; ++j) rows[0][j] = rows[j][0] = 1;
  return TransitionMatrix(std::move(rows));
}

bool underlying_graph_connected(const TransitionMatrix& a) {
  const std::size_t n = a.size();
  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y = 0; y < n; ++y) {
      if ((a.at(x, y) || a.at(y, x)) && !seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == n;
}

ReturnCountBound return_count_bound(const TransitionMatrix& a) {
  const std::size_t n = a.size();
  const int k_max = std::min(60, static_cast<int>(126.0 / std::log2(std::max<double>(2.0, static_cast<double>(n)))));
  using U = unsigned __int128;
  std::vector<std::vector<U>> power(n, std::vector<U>(n)), next(n, std::vector<U>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) power[i][j] = a.at(i, j) ? 1 : 0;
  ReturnCountBound best;
  for (int k = 1; k <= k_max; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (power[i][i] == 0) continue;
      const double h = std::log(static_cast<long double>(power[i][i])) / k;
      if (h > best.h_lower) best = {h, k, i};
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        U s = 0;
        for (std::size_t m = 0; m < n; ++m)
          if (a.at(m, j)) s += power[i][m];
        next[i][j] = s;
      }
    power.swap(next);
  }
  return best;
}

InequalityReport check_prop6(const TransitionMatrix& a) {
  const std::string statement = "h_top * T_min <= ln b_A";
  const long period = minimal_period(a);
  const double h = topological_entropy(a);
  const long b = betti_bA(a);
  const bool connected = underlying_graph_connected(a);
  InequalityReport r;
  if (b < 1) {
    r = skipped_inequality("prop6", statement, Sense::upper,
                           "b_A = " + std::to_string(b) + " < 1 (" + std::string(to_string(ErrorCode::NonPositiveBetti)) + ")");
  } else {
    r = evaluate_inequality("prop6", statement, Sense::upper, h * static_cast<double>(period),
                            std::log(static_cast<double>(b)));
  }
  r.witnesses = {{"h_top", real_json(h)},
                 {"t_min", period},
                 {"b_A", b},
                 {"underlying_connected", connected}};
  if (r.applicable && !r.holds) {
    const auto cert = return_count_bound(a);
    const double certified_left = cert.h_lower * static_cast<double>(period);
    r.witnesses["certificate"] = {{"h_lower", real_json(cert.h_lower)},
                                  {"k", cert.k},
                                  {"state", cert.state},
                                  {"confirms_violation", certified_left > r.right}};
  }
  return r;
}

}  // namespace graphiso
