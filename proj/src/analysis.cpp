#include "graphiso/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "graphiso/cycles.hpp"
#include "graphiso/error.hpp"

namespace graphiso {

long Analysis::violations() const {
  long n = 0;
  for (const auto& r : inequalities) n += is_violation(r) ? 1 : 0;
  return n;
}

std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const std::vector<std::string>& inequality_names() {
  static const std::vector<std::string> names = {
      "thm1",          "prop1",         "lemma2",        "prop2.lower",        "prop2.upper",
      "prop3",         "prop4.lower.literal",            "prop4.upper.literal", "prop4.lower.maximal",
      "prop4.upper.maximal",            "prop5.literal", "prop5.maximal",      "thm2.lower",
      "thm2.upper",    "thm3",          "regular.lower", "bs"};
  return names;
}

namespace {

const char* kBsStatement = "sigma >= (3 ln 2 / 2)(b-1)/(ln(b-1) + ln ln(b-1) + 4 ln 2 - ln ln 2)";

double default_radius(const WeightedMultigraph& g, double h) {
  if (has_unit_weights(g)) return 25.0;
  double w_min = g.edge(0).w;
  for (const auto& e : g.edges()) w_min = std::min(w_min, e.w);
  // Aim for a ball of about 10^6 edge lengths; generic weights do not merge
  // in the frontier, so the cost follows the ball volume.
  return std::log(1e6) / h + w_min;
}

}  // namespace

Analysis analyze(const WeightedMultigraph& g, const AnalysisOptions& opts) {
  require_connected(g);
  Analysis a;
  a.b = betti_number(g);
  a.vertices = g.vertex_count();
  a.edges = g.edge_count();
  a.vol = volume(g);
  if (a.b >= 1) a.sys = systole(g).length;
  a.h_vol = volume_entropy(g);
  a.c_min_literal = c_min_literal(g);
  a.c_min_maximal = c_min_maximal(g);
  a.c_max = c_max(g);

  if (!opts.estimate) {
    a.estimate_note = "not requested";
  } else if (a.b < 2) {
    a.estimate_note = "b < 2: growth is not exponential";
  } else {
    const double r = opts.r_max ? *opts.r_max : default_radius(g, a.h_vol);
    try {
      a.estimate = entropy_estimate(g, 0, r, {kAnalysisFrontierBudget});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::FrontierBudgetExceeded) throw;
      a.estimate_note = e.what();
    }
  }

  a.inequalities = check_entropy_inequalities(g);

  if (a.b < 1 || exact_volume_supported(g)) {
    a.stable = stable_ball_volume_exact(g, opts.exec);
  } else if (!opts.exact_only) {
    a.stable = stable_ball_volume_mc(g, opts.samples, opts.seed, opts.exec);
  } else {
    a.stable_note = "exact volume size limit exceeded and --exact-only set";
  }
  const auto stable_reports = a.stable ? check_stable_inequalities(g, *a.stable)
                                       : check_stable_inequalities(g, StableCheckOptions{0, 0, true});
  a.inequalities.insert(a.inequalities.end(), stable_reports.begin(), stable_reports.end());

  if (!opts.optimize) {
    a.sysvol_note = "not requested";
  } else if (a.b < 1) {
    a.sysvol_note = "b = 0: no cycle";
  } else if (g.edge_count() > kMaxOptimizeEdges) {
    a.sysvol_note = "more than " + std::to_string(kMaxOptimizeEdges) + " edges";
  } else {
    a.sysvol = optimize_systolic_volume(g, opts.tolerance);
  }
  if (a.b < 3) {
    a.inequalities.push_back(skipped_inequality("bs", kBsStatement, Sense::lower, "b < 3"));
  } else if (!a.sysvol) {
    a.inequalities.push_back(skipped_inequality("bs", kBsStatement, Sense::lower, a.sysvol_note));
  } else {
    a.inequalities.push_back(check_bs(g, *a.sysvol, opts.tolerance));
  }
  return a;
}

nlohmann::json to_json(const Analysis& a) {
  nlohmann::json j;
  j["b"] = a.b;
  j["vertices"] = a.vertices;
  j["edges"] = a.edges;
  j["vol"] = real_json(a.vol);
  j["sys"] = a.sys ? real_json(*a.sys) : nlohmann::json("inf");
  j["h_vol"] = real_json(a.h_vol);
  if (a.estimate && !a.estimate->degenerate) {
    j["h_vol_estimate"] = real_json(a.estimate->slope);
    j["residual"] = real_json(a.estimate->residual);
    j["r_max"] = real_json(a.estimate->radii.back());
  } else {
    j["h_vol_estimate"] = nullptr;
    j["residual"] = nullptr;
    j["estimate_note"] = a.estimate_note.empty() ? "degenerate" : a.estimate_note;
  }
  j["c_min_literal"] = real_json(a.c_min_literal);
  j["c_min_maximal"] = real_json(a.c_min_maximal);
  j["c_max"] = real_json(a.c_max);
  if (a.stable) {
    j["stable_ball_volume"] = real_json(a.stable->value);
    j["method"] = to_string(a.stable->method);
    j["ci99"] = real_json(a.stable->ci99);
    if (a.stable->method == StableBallVolume::Method::monte_carlo) j["samples"] = a.stable->samples;
  } else {
    j["stable_ball_volume"] = nullptr;
    j["method"] = nullptr;
    j["ci99"] = nullptr;
    j["stable_note"] = a.stable_note;
  }
  if (a.sysvol) {
    j["sigma"] = real_json(a.sysvol->sigma);
  } else {
    j["sigma"] = nullptr;
    j["sigma_note"] = a.sysvol_note;
  }
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : a.inequalities) list.push_back(to_json(r));
  j["inequalities"] = std::move(list);
  j["violations"] = a.violations();
  return j;
}

std::string to_table(const Analysis& a) {
  std::ostringstream out;
  auto line = [&](const std::string& k, const std::string& v) {
    out << k << std::string(k.size() < 22 ? 22 - k.size() : 1, ' ') << v << '\n';
  };
  line("b", std::to_string(a.b));
  line("vertices", std::to_string(a.vertices));
  line("edges", std::to_string(a.edges));
  line("vol", format_real(a.vol));
  line("sys", a.sys ? format_real(*a.sys) : "inf");
  line("h_vol", format_real(a.h_vol));
  line("h_vol_estimate", a.estimate && !a.estimate->degenerate ? format_real(a.estimate->slope) : "-");
  line("c_min (literal)", format_real(a.c_min_literal));
  line("c_min (maximal)", format_real(a.c_min_maximal));
  line("c_max", format_real(a.c_max));
  if (a.stable) {
    std::string v = format_real(a.stable->value) + " (" + std::string(to_string(a.stable->method));
    if (a.stable->method == StableBallVolume::Method::monte_carlo) v += ", ci99 " + format_real(a.stable->ci99);
    line("stable_ball_volume", v + ")");
  } else {
    line("stable_ball_volume", "-");
  }
  line("sigma", a.sysvol ? format_real(a.sysvol->sigma) : "-");
  out << '\n';
  for (const auto& r : a.inequalities) {
    std::string status;
    if (!r.applicable) {
      status = "n/a   " + r.reason;
    } else {
      status = std::string(r.holds ? "ok    " : (r.finding_only ? "FIND  " : "FAIL  ")) + "slack " +
               format_real(r.slack) + (r.equality ? "  equality" : "");
    }
    line(r.name, status);
  }
  return out.str();
}

std::string csv_header() {
  std::string h = "# schema=1\nindex,seed,kind,b,vertices,edges,vol,sys,h_vol,h_vol_estimate,residual,"
                  "c_min_literal,c_min_maximal,c_max,stable_ball_volume,method,ci99,sigma";
  for (const auto& n : inequality_names()) h += "," + n + ".slack";
  return h + ",violations\n";
}

std::string csv_row(const Analysis& a, std::size_t index, std::uint64_t seed, const std::string& kind) {
  std::ostringstream out;
  const bool est = a.estimate && !a.estimate->degenerate;
  out << index << ',' << seed << ',' << kind << ',' << a.b << ',' << a.vertices << ',' << a.edges << ','
      << format_real(a.vol) << ',' << (a.sys ? format_real(*a.sys) : "inf") << ',' << format_real(a.h_vol) << ','
      << (est ? format_real(a.estimate->slope) : "") << ',' << (est ? format_real(a.estimate->residual) : "") << ','
      << format_real(a.c_min_literal) << ',' << format_real(a.c_min_maximal) << ',' << format_real(a.c_max) << ',';
  if (a.stable) {
    out << format_real(a.stable->value) << ',' << to_string(a.stable->method) << ',' << format_real(a.stable->ci99);
  } else {
    out << ",,";
  }
  out << ',' << (a.sysvol ? format_real(a.sysvol->sigma) : "");
  for (const auto& n : inequality_names()) {
    out << ',';
    for (const auto& r : a.inequalities) {
      if (r.name == n && r.applicable) out << format_real(r.slack);
    }
  }
  out << ',' << a.violations() << '\n';
  return out.str();
}

}  // namespace graphiso
