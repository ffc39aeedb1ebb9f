#pragma once

#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

namespace graphiso {

class WeightedMultigraph;
struct CycleWitness;

enum class Sense { upper, lower };  // upper: left <= right, lower: left >= right
enum class Provenance { exact, estimate, mc };

/// Outcome of evaluating one inequality on one input. `left` is the measured
/// quantity, `right` the bound; slack is positive when the inequality holds.
struct InequalityReport {
  std::string name;
  std::string statement;
  Sense sense = Sense::upper;
  bool applicable = false;
  std::string reason;
  double left = std::numeric_limits<double>::quiet_NaN();
  double right = std::numeric_limits<double>::quiet_NaN();
  double slack = std::numeric_limits<double>::quiet_NaN();
  bool equality = false;
  bool holds = true;
  /// Failures of a finding-only entry are reported but do not count as violations.
  bool finding_only = false;
  Provenance provenance = Provenance::exact;
  double ci99 = 0.0;
  nlohmann::json witnesses = nlohmann::json::object();
};

constexpr double kInequalityTolerance = 1e-9;

InequalityReport evaluate_inequality(std::string name, std::string statement, Sense sense, double left,
                                     double right, double tol = kInequalityTolerance);

InequalityReport skipped_inequality(std::string name, std::string statement, Sense sense, std::string reason);

bool is_violation(const InequalityReport& r);

std::string_view to_string(Sense s);
std::string_view to_string(Provenance p);

/// Rounds to 12 significant digits; non-finite values become JSON null
/// (callers that need "inf" spell it out themselves).
nlohmann::json real_json(double x);

nlohmann::json to_json(const InequalityReport& r);

/// Edge-id sequence with direction marks, length and homology class.
nlohmann::json to_json(const WeightedMultigraph& g, const CycleWitness& w);

}  // namespace graphiso
