#include "graphiso/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "graphiso/cycles.hpp"
#include "graphiso/graph.hpp"

namespace graphiso {

InequalityReport evaluate_inequality(std::string name, std::string statement, Sense sense, double left,
                                     double right, double tol) {
  InequalityReport r;
  r.name = std::move(name);
  r.statement = std::move(statement);
  r.sense = sense;
  r.applicable = true;
  r.left = left;
  r.right = right;
  r.slack = sense == Sense::upper ? right - left : left - right;
  const double scale = std::max(1.0, std::abs(right));
  r.holds = r.slack >= -tol * scale;
  r.equality = std::abs(r.slack) <= tol * scale;
  return r;
}

InequalityReport skipped_inequality(std::string name, std::string statement, Sense sense, std::string reason) {
  InequalityReport r;
  r.name = std::move(name);
  r.statement = std::move(statement);
  r.sense = sense;
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

bool is_violation(const InequalityReport& r) { return r.applicable && !r.holds && !r.finding_only; }

std::string_view to_string(Sense s) { return s == Sense::upper ? "upper" : "lower"; }

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::estimate: return "estimate";
    case Provenance::mc: return "mc";
  }
  return "exact";
}

nlohmann::json real_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::json to_json(const InequalityReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["statement"] = r.statement;
  j["sense"] = to_string(r.sense);
  j["applicable"] = r.applicable;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.applicable) {
    j["left"] = real_json(r.left);
    j["right"] = real_json(r.right);
    j["slack"] = real_json(r.slack);
    j["equality"] = r.equality;
    j["holds"] = r.holds;
    j["provenance"] = to_string(r.provenance);
    if (r.provenance == Provenance::mc) j["ci99"] = real_json(r.ci99);
  }
  if (r.finding_only) j["finding_only"] = true;
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  return j;
}

nlohmann::json to_json(const WeightedMultigraph& g, const CycleWitness& w) {
  nlohmann::json walk = nlohmann::json::array();
  for (const auto& step : w.walk) {
    walk.push_back((step.forward ? "+" : "-") + g.edge(step.edge).id);
  }
  return {{"walk", walk}, {"length", real_json(w.length)}, {"homology", w.homology}};
}

}  // namespace graphiso
