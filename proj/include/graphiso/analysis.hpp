#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphiso/entropy.hpp"
#include "graphiso/graph.hpp"
#include "graphiso/parallel.hpp"
#include "graphiso/report.hpp"
#include "graphiso/stable_norm.hpp"
#include "graphiso/sysvol.hpp"
#include "json.hpp"

namespace graphiso {

struct AnalysisOptions {
  double tolerance = 1e-7;          // optimizer stopping tolerance
  std::uint64_t samples = 1000000;  // Monte Carlo fallback for the stable ball
  std::uint64_t seed = 1;
  /// Estimator radius. Unset: 25 for unit weights, otherwise the radius at
  /// which the cover ball reaches about 10^6 times its edge scale.
  std::optional<double> r_max;
  bool estimate = true;
  bool exact_only = false;  // never fall back to Monte Carlo
  bool optimize = true;     // systolic constant (graphs with at most kMaxOptimizeEdges edges)
  Exec exec = Exec::parallel;
};

inline constexpr std::size_t kMaxOptimizeEdges = 60;
/// Frontier cap used by the analysis; the estimate is dropped when exceeded.
inline constexpr long kAnalysisFrontierBudget = 4000000;

struct Analysis {
  long b = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double vol = 0.0;
  std::optional<double> sys;  // none for trees
  double h_vol = 0.0;
  std::optional<EntropyEstimate> estimate;
  std::string estimate_note;
  double c_min_literal = 0.0;
  double c_min_maximal = 0.0;
  double c_max = 0.0;
  std::optional<StableBallVolume> stable;
  std::string stable_note;
  std::optional<SysvolResult> sysvol;
  std::string sysvol_note;
  std::vector<InequalityReport> inequalities;

  long violations() const;
};

/// Every invariant and inequality check on one graph. Throws NotConnected.
Analysis analyze(const WeightedMultigraph& g, const AnalysisOptions& opts = {});

nlohmann::json to_json(const Analysis& a);
std::string to_table(const Analysis& a);

/// Inequality names in report order; fixed, they define the CSV columns.
const std::vector<std::string>& inequality_names();

std::string csv_header();
std::string csv_row(const Analysis& a, std::size_t index, std::uint64_t seed, const std::string& kind);

/// Formats with 12 significant digits.
std::string format_real(double x);

}  // namespace graphiso
