#include "graphiso/cli.hpp"

#include <exception>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphiso/analysis.hpp"
#include "graphiso/error.hpp"
#include "graphiso/generators.hpp"
#include "graphiso/graph_io.hpp"
#include "graphiso/subshift.hpp"
#include "graphiso/sysvol.hpp"

namespace graphiso {

namespace {

struct Settings {
  double tolerance = 1e-7;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000000;
  double r_max = 0.0;  // 0: automatic
  std::string format = "json";
  bool exact_only = false;
  bool no_optimize = false;

  // analyze / subshift / optimize
  std::string file;

  // batch / generate
  std::string kind;
  long count = 0;
  int b = 2;
  int b_min = 2;
  int b_max = 8;
  double w_min = 0.1;
  double w_max = 10.0;
  int n = 4;
  int n_max = 12;
  std::vector<int> valences{3, 4, 5};
  std::vector<double> weights;
};

AnalysisOptions analysis_options(const Settings& s) {
  AnalysisOptions o;
  o.tolerance = s.tolerance;
  o.samples = s.samples;
  o.seed = s.seed;
  if (s.r_max > 0.0) o.r_max = s.r_max;
  o.exact_only = s.exact_only;
  o.optimize = !s.no_optimize;
  return o;
}

int cmd_analyze(const Settings& s, std::ostream& out) {
  const auto g = read_graph_file(s.file);
  const auto a = analyze(g, analysis_options(s));
  if (s.format == "table") {
    out << to_table(a);
  } else if (s.format == "csv") {
    out << csv_header() << csv_row(a, 0, s.seed, "file");
  } else {
    out << to_json(a).dump(2) << '\n';
  }
  return a.violations() > 0 ? kExitViolation : kExitOk;
}

WeightedMultigraph batch_instance(const Settings& s, std::uint64_t seed) {
  if (s.kind == "weighted") {
    gen::RandomWeightedParams p;
    p.b_min = s.b_min;
    p.b_max = s.b_max;
    p.w_min = s.w_min;
    p.w_max = s.w_max;
    return gen::random_weighted(p, seed);
  }
  if (s.kind == "unit") return gen::random_unit(s.b_min, s.b_max, seed);
  if (s.kind == "regular") {
    std::mt19937_64 rng(seed);
    const int v = s.valences[std::uniform_int_distribution<std::size_t>(0, s.valences.size() - 1)(rng)];
    std::vector<int> ns;
    for (int n = v + 1; n <= s.n_max; ++n)
      if ((n * v) % 2 == 0) ns.push_back(n);
    if (ns.empty()) {
      throw Error(ErrorCode::InfeasibleParameters, "no vertex count <= " + std::to_string(s.n_max) +
                                                       " admits a " + std::to_string(v) + "-regular graph");
    }
    const int n = ns[std::uniform_int_distribution<std::size_t>(0, ns.size() - 1)(rng)];
    return gen::random_regular(n, v, seed);
  }
  throw Error(ErrorCode::BadParameter, "unknown batch kind '" + s.kind + "'");
}

int cmd_batch(const Settings& s, std::ostream& out) {
  if (s.count < 0) throw Error(ErrorCode::BadParameter, "count must be >= 0");
  if (s.kind == "regular" && s.valences.empty()) throw Error(ErrorCode::InfeasibleParameters, "no valence given");
  // Fail on bad parameters before any work, and for count = 0 too.
  batch_instance(s, gen::derive_seed(s.seed, 0));

  const auto n = static_cast<std::size_t>(s.count);
  std::vector<std::string> rows(n);
  std::vector<long> violations(n, 0);
  std::vector<std::exception_ptr> errors(n);
  auto opts = analysis_options(s);
  opts.estimate = s.r_max > 0.0;
  opts.exec = Exec::serial;

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      const auto seed = gen::derive_seed(s.seed, i);
      auto local = opts;
      local.seed = seed;
      const auto a = analyze(batch_instance(s, seed), local);
      rows[i] = csv_row(a, i, seed, s.kind);
      violations[i] = a.violations();
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  out << csv_header();
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out << rows[i];
    total += violations[i];
  }
  return total > 0 ? kExitViolation : kExitOk;
}

int cmd_subshift(const Settings& s, std::ostream& out) {
  const auto a = read_matrix_file(s.file);
  const auto r = check_prop6(a);
  nlohmann::json j = {{"n", a.size()}, {"inequality", to_json(r)}};
  out << j.dump(2) << '\n';
  return is_violation(r) ? kExitViolation : kExitOk;
}

int cmd_optimize(const Settings& s, std::ostream& out) {
  const auto g = read_graph_file(s.file);
  const auto res = optimize_systolic_volume(g, s.tolerance);
  nlohmann::json weights = nlohmann::json::object();
  for (std::size_t e = 0; e < g.edge_count(); ++e) weights[g.edge(e).id] = real_json(res.weights[e]);
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& c : res.active_cycles) cycles.push_back(to_json(g, c));
  const long b = betti_number(g);
  nlohmann::json j = {{"sigma", real_json(res.sigma)},
                      {"weights", weights},
                      {"active_cycles", cycles},
                      {"bs_lower_bound", b >= 3 ? real_json(bs_lower_bound(b)) : nlohmann::json(nullptr)},
                      {"final_systole", real_json(res.final_systole)},
                      {"dual_objective", real_json(res.dual_objective)},
                      {"rounds", res.rounds},
                      {"pool_size", res.pool_size}};
  int code = kExitOk;
  if (b >= 3) {
    const auto r = check_bs(g, res, s.tolerance);
    j["bs"] = to_json(r);
    if (is_violation(r)) code = kExitViolation;
  }
  out << j.dump(2) << '\n';
  return code;
}

int cmd_generate(const Settings& s, std::ostream& out) {
  if (s.kind == "equality-family") {
    out << matrix_to_json(equality_family(s.b)).dump() << '\n';
    return kExitOk;
  }
  WeightedMultigraph g;
  if (s.kind == "bouquet") {
    g = gen::bouquet(s.b, s.weights);
  } else if (s.kind == "theta") {
    g = gen::theta(s.b + 1, s.weights);
  } else if (s.kind == "complete") {
    g = gen::complete(s.n);
  } else if (s.kind == "cycle") {
    g = gen::cycle(s.n);
  } else if (s.kind == "regular") {
    if (s.valences.empty()) throw Error(ErrorCode::InfeasibleParameters, "no valence given");
    g = gen::random_regular(s.n, s.valences.front(), s.seed);
  } else {
    g = batch_instance(s, s.seed);
  }
  out << graph_to_json(g).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Systolic and entropy invariants of weighted graphs"};
  app.require_subcommand(1);
  Settings s;

  auto common = [&](CLI::App* c) {
    c->add_option("--tolerance", s.tolerance, "optimizer stopping tolerance")->check(CLI::PositiveNumber);
    c->add_option("--seed", s.seed, "base random seed");
    c->add_option("--samples", s.samples, "Monte Carlo samples for the stable ball")->check(CLI::PositiveNumber);
    c->add_option("--rmax", s.r_max, "entropy estimator radius")->check(CLI::NonNegativeNumber);
    c->add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
    c->add_flag("--exact-only", s.exact_only, "never fall back to Monte Carlo");
    c->add_flag("--no-optimize", s.no_optimize, "skip the systolic-constant optimizer");
  };

  auto* analyze = app.add_subcommand("analyze", "all invariants and inequality checks for one graph file");
  analyze->add_option("file", s.file, "graph JSON")->required();
  common(analyze);

  auto* batch = app.add_subcommand("batch", "CSV of invariants and slacks over a generated corpus");
  batch->add_option("--kind", s.kind, "weighted | unit | regular")->required();
  batch->add_option("--count", s.count, "number of instances")->required();
  batch->add_option("--b-min", s.b_min);
  batch->add_option("--b-max", s.b_max);
  batch->add_option("--w-min", s.w_min);
  batch->add_option("--w-max", s.w_max);
  batch->add_option("--n-max", s.n_max, "largest vertex count for regular graphs");
  batch->add_option("--valence", s.valences, "valences for regular graphs");
  common(batch);

  auto* subshift = app.add_subcommand("subshift", "entropy / minimal period check for a 0/1 matrix file");
  subshift->add_option("file", s.file, "matrix JSON")->required();

  auto* optimize = app.add_subcommand("optimize", "systolic constant by cutting planes");
  optimize->add_option("file", s.file, "graph JSON")->required();
  optimize->add_option("--tolerance", s.tolerance)->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "write a generated graph (or matrix) as JSON");
  generate->add_option("--kind", s.kind,
                       "bouquet | theta | complete | cycle | regular | weighted | unit | equality-family")
      ->required();
  generate->add_option("--b", s.b, "Betti number (bouquet, theta, equality-family)");
  generate->add_option("--n", s.n, "vertex count (complete, cycle, regular)");
  generate->add_option("--valence", s.valences);
  generate->add_option("--weights", s.weights);
  generate->add_option("--seed", s.seed);
  generate->add_option("--b-min", s.b_min);
  generate->add_option("--b-max", s.b_max);
  generate->add_option("--w-min", s.w_min);
  generate->add_option("--w-max", s.w_max);
  generate->add_option("--n-max", s.n_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(s, out);
    if (batch->parsed()) return cmd_batch(s, out);
    if (subshift->parsed()) return cmd_subshift(s, out);
    if (optimize->parsed()) return cmd_optimize(s, out);
    if (generate->parsed()) return cmd_generate(s, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace graphiso
