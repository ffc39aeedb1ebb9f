#include "graphiso/int_linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace graphiso::intla {

namespace {

using WideMatrix = std::vector<std::vector<Wide>>;

WideMatrix widen(const std::vector<IntRow>& m) {
  WideMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m[i].begin(), m[i].end());
  return out;
}

// Fraction-free elimination in place. Returns rank; when the matrix is
// square and of full rank, *det receives the determinant.
int bareiss(WideMatrix& a, Wide* det) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Wide prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (det) *det = (r == rows && rows == cols) ? (rows ? sign * prev : Wide{1}) : Wide{0};
  return static_cast<int>(r);
}

}  // namespace

Wide determinant(const std::vector<IntRow>& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("determinant: matrix not square");
  }
  auto a = widen(m);
  Wide det = 0;
  bareiss(a, &det);
  return det;
}

int rank(const std::vector<IntRow>& rows) {
  if (rows.empty()) return 0;
  auto a = widen(rows);
  return bareiss(a, nullptr);
}

long long dot(const IntRow& a, const IntRow& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long long make_primitive(IntRow& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, std::llabs(x));
  if (g == 0) return 0;
  long long first = 0;
  for (long long x : v) {
    if (x != 0) {
      first = x;
      break;
    }
  }
  const long long factor = first < 0 ? -g : g;
  for (auto& x : v) x /= factor;
  return factor;
}

IntRow null_vector(const std::vector<IntRow>& rows, int k) {
  IntRow out(static_cast<std::size_t>(k), 0);
  if (k == 1) {
    out[0] = 1;
    return out;
  }
  std::vector<IntRow> minor(rows.size(), IntRow(static_cast<std::size_t>(k - 1)));
  for (int skip = 0; skip < k; ++skip) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (int j = 0, t = 0; j < k; ++j) {
        if (j != skip) minor[i][static_cast<std::size_t>(t++)] = rows[i][static_cast<std::size_t>(j)];
      }
    }
    const Wide d = determinant(minor);
    out[static_cast<std::size_t>(skip)] = static_cast<long long>((skip % 2 == 0) ? d : -d);
  }
  make_primitive(out);
  return out;
}

double to_double(Wide x) { return static_cast<double>(x); }

}  // namespace graphiso::intla
