#pragma once

#include <cstddef>
#include <vector>

#include "graphiso/report.hpp"
#include "graphiso/spectral.hpp"

namespace graphiso {

/// Square 0/1 matrix defining a topological Markov chain; entry (i,j) = 1
/// allows the transition i -> j.
class TransitionMatrix {
public:
  /// Throws NonSquare (ragged or empty), BadParameter (entry not 0/1).
  explicit TransitionMatrix(std::vector<std::vector<int>> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  bool at(std::size_t i, std::size_t j) const { return rows_[i][j] != 0; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  long entry_sum() const;
  DenseMatrix to_dense() const;

private:
  std::vector<std::vector<int>> rows_;
};

/// Length of the shortest directed cycle. Throws EmptySubshift when acyclic.
long minimal_period(const TransitionMatrix& a);

/// ln rho(A). Throws EmptySubshift when acyclic.
double topological_entropy(const TransitionMatrix& a);

/// Number of admissible words of length k, by exact path counting.
/// Oracle scale only: n <= 12, k <= 30, else OracleBudgetExceeded.
unsigned __int128 count_admissible_words(const TransitionMatrix& a, int k);

/// sum A_ij - n + 1, taken literally (can be <= 0 for sparse matrices).
long betti_bA(const TransitionMatrix& a);

/// Star on b+1 states: state 0 exchanges with every other state.
TransitionMatrix equality_family(int b);

/// Whether the underlying undirected graph of Gamma_A is connected; the
/// Betti formula is only a Betti number in that case.
bool underlying_graph_connected(const TransitionMatrix& a);

/// Rigorous lower bound on h_top from closed-walk counts: rho(A)^k >= (A^k)_ii
/// for every state i, so h_top >= ln((A^k)_ii) / k. Exact integer powers up
/// to a length that cannot overflow (at most 60).
struct ReturnCountBound {
  double h_lower = 0.0;
  int k = 0;
  std::size_t state = 0;
};
ReturnCountBound return_count_bound(const TransitionMatrix& a);

/// h_top * T_min <= ln b_A. Skipped (reported) when b_A < 1. A failure
/// carries a return-count certificate showing whether the excess survives
/// an exact integer lower bound. Throws EmptySubshift.
InequalityReport check_prop6(const TransitionMatrix& a);

}  // namespace graphiso
