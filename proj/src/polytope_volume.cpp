#include "graphiso/polytope_volume.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "graphiso/error.hpp"
#include "graphiso/generators.hpp"
#include "graphiso/lp.hpp"

namespace graphiso {

double L1Section::norm(std::span<const double> x) const {
  double total = 0.0;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    double d = 0.0;
    for (int i = 0; i < dim; ++i) d += static_cast<double>(rows[j][static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)];
    total += weights[j] * std::abs(d);
  }
  return total;
}

L1Section canonical_section(int dim, const std::vector<intla::IntRow>& rows, std::span<const double> weights) {
  L1Section s;
  s.dim = dim;
  std::map<intla::IntRow, std::size_t> index;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    intla::IntRow r = rows[j];
    const long long factor = intla::make_primitive(r);
    if (factor == 0) continue;
    const double w = weights[j] * static_cast<double>(std::llabs(factor));
    auto [it, fresh] = index.emplace(r, s.rows.size());
    if (fresh) {
      s.rows.push_back(std::move(r));
      s.weights.push_back(w);
    } else {
      s.weights[it->second] += w;
    }
  }
  return s;
}

namespace {

using Simplex = std::vector<int>;

struct Arrangement {
  int dim = 0;
  std::vector<intla::IntRow> rays;
  std::vector<std::vector<signed char>> sign;  // sign[ray][row]
  std::vector<double> ray_norm;
};

int sgn(long long x) { return (x > 0) - (x < 0); }

Arrangement enumerate_rays(const L1Section& s) {
  Arrangement arr;
  arr.dim = s.dim;
  const int k = s.dim;
  const int m = static_cast<int>(s.rows.size());
  std::set<intla::IntRow> lines;
  // Every (k-1)-subset of independent rows cuts out one line.
  std::vector<int> pick(static_cast<std::size_t>(k - 1));
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == k - 1) {
      std::vector<intla::IntRow> sub;
      sub.reserve(pick.size());
      for (int j : pick) sub.push_back(s.rows[static_cast<std::size_t>(j)]);
      auto nv = intla::null_vector(sub, k);
      if (std::any_of(nv.begin(), nv.end(), [](long long x) { return x != 0; })) lines.insert(nv);
      return;
    }
    for (int j = start; j <= m - (k - 1 - depth); ++j) {
      pick[static_cast<std::size_t>(depth)] = j;
      choose(j + 1, depth + 1);
    }
  };
  choose(0, 0);
  for (const auto& line : lines) {
    arr.rays.push_back(line);
    intla::IntRow neg = line;
    for (auto& x : neg) x = -x;
    arr.rays.push_back(std::move(neg));
  }
  for (const auto& r : arr.rays) {
    std::vector<signed char> sig(static_cast<std::size_t>(m));
    double nrm = 0.0;
    for (int j = 0; j < m; ++j) {
      const long long d = intla::dot(s.rows[static_cast<std::size_t>(j)], r);
      sig[static_cast<std::size_t>(j)] = static_cast<signed char>(sgn(d));
      nrm += s.weights[static_cast<std::size_t>(j)] * static_cast<double>(std::llabs(d));
    }
    arr.sign.push_back(std::move(sig));
    arr.ray_norm.push_back(nrm);
  }
  return arr;
}

int ray_rank(const Arrangement& arr, const std::vector<int>& ids) {
  std::vector<intla::IntRow> m;
  m.reserve(ids.size());
  for (int r : ids) m.push_back(arr.rays[static_cast<std::size_t>(r)]);
  return intla::rank(m);
}

std::vector<int> region_rays(const Arrangement& arr, const std::vector<signed char>& region) {
  std::vector<int> out;
  for (std::size_t r = 0; r < arr.rays.size(); ++r) {
    bool conforms = true;
    for (std::size_t j = 0; j < region.size() && conforms; ++j) {
      conforms = arr.sign[r][j] == 0 || arr.sign[r][j] == region[j];
    }
    if (conforms) out.push_back(static_cast<int>(r));
  }
  return out;
}

// Regions of the arrangement, found by walking across facets from one
// generic starting point.
std::vector<std::vector<signed char>> enumerate_regions(const L1Section& s, const Arrangement& arr) {
  const std::size_t m = s.rows.size();
  static constexpr double kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  std::vector<double> generic(static_cast<std::size_t>(s.dim));
  for (int i = 0; i < s.dim; ++i) generic[static_cast<std::size_t>(i)] = std::sqrt(kPrimes[i % 16] + 0.5 * (i / 16));
  std::vector<signed char> start(m);
  for (std::size_t j = 0; j < m; ++j) {
    double d = 0.0;
    for (int i = 0; i < s.dim; ++i) d += static_cast<double>(s.rows[j][static_cast<std::size_t>(i)]) * generic[static_cast<std::size_t>(i)];
    start[j] = d > 0 ? 1 : -1;
  }

  std::set<std::vector<signed char>> seen{start};
  std::deque<std::vector<signed char>> todo{start};
  std::vector<std::vector<signed char>> regions;
  while (!todo.empty()) {
    auto region = std::move(todo.front());
    todo.pop_front();
    const auto rays = region_rays(arr, region);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<int> on_wall;
      for (int r : rays)
        if (arr.sign[static_cast<std::size_t>(r)][j] == 0) on_wall.push_back(r);
      if (ray_rank(arr, on_wall) != s.dim - 1) continue;
      auto next = region;
      next[j] = static_cast<signed char>(-next[j]);
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
    regions.push_back(std::move(region));
  }
  return regions;
}

// Pulling triangulation of a pointed cone given by its rays (sorted).
std::vector<Simplex> triangulate(const Arrangement& arr, const std::vector<int>& rays, int dim) {
  if (static_cast<int>(rays.size()) == dim) return {rays};
  const int apex = rays.front();
  std::set<std::vector<int>> facets;
  const std::size_t m = arr.sign.front().size();
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<int> g;
    for (int r : rays)
      if (arr.sign[static_cast<std::size_t>(r)][j] == 0) g.push_back(r);
    if (g.empty() || g.size() == rays.size()) continue;
    if (std::find(g.begin(), g.end(), apex) != g.end()) continue;
    if (facets.count(g)) continue;
    if (ray_rank(arr, g) == dim - 1) facets.insert(std::move(g));
  }
  std::vector<Simplex> out;
  for (const auto& f : facets) {
    for (auto& simplex : triangulate(arr, f, dim - 1)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

struct RegionVolume {
  double volume = 0.0;
  std::size_t simplices = 0;
};

RegionVolume region_volume(const Arrangement& arr, const std::vector<signed char>& region) {
  const auto rays = region_rays(arr, region);
  const auto simplices = triangulate(arr, rays, arr.dim);
  double factorial = 1.0;
  for (int i = 2; i <= arr.dim; ++i) factorial *= i;
  RegionVolume rv;
  rv.simplices = simplices.size();
  for (const auto& simplex : simplices) {
    std::vector<intla::IntRow> m;
    double norms = 1.0;
    for (int r : simplex) {
      m.push_back(arr.rays[static_cast<std::size_t>(r)]);
      norms *= arr.ray_norm[static_cast<std::size_t>(r)];
    }
    const double det = std::abs(intla::to_double(intla::determinant(m)));
    rv.volume += det / (factorial * norms);
  }
  return rv;
}

}  // namespace

ExactVolume exact_volume(const L1Section& s, Exec exec) {
  if (s.dim < 1) throw Error(ErrorCode::BadParameter, "section dimension must be >= 1");
  if (intla::rank(s.rows) != s.dim) throw Error(ErrorCode::BadParameter, "rows do not span the space; polytope is unbounded");

  const Arrangement arr = enumerate_rays(s);
  const auto regions = enumerate_regions(s, arr);
  std::vector<RegionVolume> parts(regions.size());
  const long count = static_cast<long>(regions.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = region_volume(arr, regions[static_cast<std::size_t>(i)]);
  } else {
    for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = region_volume(arr, regions[static_cast<std::size_t>(i)]);
  }

  ExactVolume out;
  out.rays = arr.rays.size();
  out.regions = regions.size();
  for (const auto& p : parts) {
    out.volume += p.volume;
    out.simplices += p.simplices;
  }
  return out;
}

std::vector<double> coordinate_extents(const L1Section& s) {
  const std::size_t k = static_cast<std::size_t>(s.dim);
  const std::size_t m = s.rows.size();
  // variables: x+ (k), x- (k), t (m)
  lp::Problem p;
  p.a = DenseMatrix(2 * m + 1, 2 * k + m);
  p.b.assign(2 * m + 1, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const double a = static_cast<double>(s.rows[j][i]);
      p.a(2 * j, i) = a;
      p.a(2 * j, k + i) = -a;
      p.a(2 * j + 1, i) = -a;
      p.a(2 * j + 1, k + i) = a;
    }
    p.a(2 * j, 2 * k + j) = -1.0;
    p.a(2 * j + 1, 2 * k + j) = -1.0;
    p.a(2 * m, 2 * k + j) = s.weights[j];
  }
  p.b[2 * m] = 1.0;
  std::vector<double> extents(k);
  for (std::size_t i = 0; i < k; ++i) {
    p.c.assign(2 * k + m, 0.0);
    p.c[i] = 1.0;
    p.c[k + i] = -1.0;
    extents[i] = lp::maximize(p).objective;
  }
  return extents;
}

McCount mc_count(const L1Section& s, std::span<const double> half_widths, std::uint64_t samples, std::uint64_t seed,
                 Exec exec) {
  const std::size_t k = static_cast<std::size_t>(s.dim);
  const std::size_t m = s.rows.size();
  std::vector<double> rows(m * k);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i) rows[j * k + i] = static_cast<double>(s.rows[j][i]);

  auto run_shard = [&](int shard) {
    const std::uint64_t n = samples / kMcShards + (static_cast<std::uint64_t>(shard) < samples % kMcShards ? 1 : 0);
    std::mt19937_64 rng(gen::derive_seed(seed, static_cast<std::uint64_t>(shard)));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> x(k);
    std::uint64_t inside = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
      for (std::size_t i = 0; i < k; ++i) x[i] = half_widths[i] * unit(rng);
      double total = 0.0;
      for (std::size_t j = 0; j < m && total <= 1.0; ++j) {
        double d = 0.0;
        for (std::size_t i = 0; i < k; ++i) d += rows[j * k + i] * x[i];
        total += s.weights[j] * std::abs(d);
      }
      if (total <= 1.0) ++inside;
    }
    return inside;
  };

  std::vector<std::uint64_t> per_shard(kMcShards, 0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (int shard = 0; shard < kMcShards; ++shard) per_shard[static_cast<std::size_t>(shard)] = run_shard(shard);
  } else {
    for (int shard = 0; shard < kMcShards; ++shard) per_shard[static_cast<std::size_t>(shard)] = run_shard(shard);
  }
  McCount c;
  c.total = samples;
  for (auto v : per_shard) c.inside += v;
  return c;
}

}  // namespace graphiso
