#pragma once

#include <cstdint>
#include <vector>

namespace graphiso::intla {

using Wide = __int128;
using IntRow = std::vector<long long>;

/// Exact determinant of a square integer matrix (fraction-free Bareiss).
Wide determinant(const std::vector<IntRow>& m);

/// Exact rank of an integer matrix given by rows.
int rank(const std::vector<IntRow>& rows);

/// For k-1 rows in Z^k: the vector of signed maximal minors, which spans the
/// kernel when the rows are independent and is zero otherwise. Divided by
/// the gcd of its entries and sign-normalized so the first nonzero entry is
/// positive.
IntRow null_vector(const std::vector<IntRow>& rows, int k);

/// Divides by gcd and flips so the first nonzero entry is positive. Returns
/// the signed factor that was divided out (0 for the zero vector).
long long make_primitive(IntRow& v);

long long dot(const IntRow& a, const IntRow& b);

double to_double(Wide x);

}  // namespace graphiso::intla
