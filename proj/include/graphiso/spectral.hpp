#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace graphiso {

/// Row-major dense matrix of doubles.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Compressed sparse rows; used for the edge transfer matrices.
struct SparseMatrix {
  std::size_t n = 0;
  std::vector<std::size_t> row_start;  // size n+1
  std::vector<std::size_t> col;
  std::vector<double> value;
};

SparseMatrix to_sparse(const DenseMatrix& m);

struct PowerIterationOptions {
  double tolerance = 1e-13;  // relative gap between the bounds of the shifted matrix
  long max_iterations = 1000000;
  /// Stop as soon as the certified bounds lie strictly on one side of this value.
  std::optional<double> separate_from;
};

struct SpectralResult {
  double rho = 0.0;
  double lower = 0.0;  // Collatz-Wielandt lower bound
  double upper = 0.0;  // Collatz-Wielandt upper bound
  long iterations = 0;
  bool certified = false;  // bounds met to tolerance
};

/// Perron root of a nonnegative square matrix: the largest Perron root over
/// its strongly connected blocks, each found by power iteration on B + I.
/// The shift keeps the dominant eigenvalue isolated for periodic blocks.
/// Convergence is declared when the Collatz-Wielandt bounds meet (or stop
/// moving at rounding level). Throws NonSquare, NegativeEntry, NoConvergence.
SpectralResult spectral_radius(const DenseMatrix& m, const PowerIterationOptions& opts = {});
SpectralResult spectral_radius(const SparseMatrix& m, const PowerIterationOptions& opts = {});

}  // namespace graphiso
