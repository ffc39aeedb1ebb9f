#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "graphiso/cli.hpp"
#include "graphiso/generators.hpp"
#include "graphiso/graph_io.hpp"
#include "json.hpp"

using namespace graphiso;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "graphiso");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / ("graphiso_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("analyze theta") {
  const auto file = write_temp("theta.json", graph_to_json(gen::theta(3)).dump());
  const auto r = run({"analyze", file});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["b"] == 2);
  CHECK(j["sys"].get<double>() == doctest::Approx(2.0));
  CHECK(j["h_vol"].get<double>() == doctest::Approx(std::log(2.0)));
  CHECK(j["method"] == "exact");
  CHECK(j["sigma"].get<double>() == doctest::Approx(1.5));
  bool saw_thm1 = false;
  for (const auto& ineq : j["inequalities"]) {
    if (ineq["name"] == "thm1") {
      saw_thm1 = true;
      CHECK(ineq["left"].get<double>() == doctest::Approx(2.0 * std::log(2.0)));
      CHECK(ineq["right"].get<double>() == doctest::Approx(2.0 * std::log(63.0)));
    }
  }
  CHECK(saw_thm1);
  // Identical input gives identical bytes.
  CHECK(run({"analyze", file}).out == r.out);
}

TEST_CASE("analyze flags the bouquet equality") {
  const auto file = write_temp("bouquet4.json", graph_to_json(gen::bouquet(4)).dump());
  const auto j = nlohmann::json::parse(run({"analyze", file}).out);
  for (const auto& ineq : j["inequalities"]) {
    if (ineq["name"] == "prop3") CHECK(ineq["equality"] == true);
  }
}

TEST_CASE("analyze table and csv formats") {
  const auto file = write_temp("k4.json", graph_to_json(gen::complete(4)).dump());
  const auto table = run({"analyze", file, "--format", "table"});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("h_vol") != std::string::npos);
  const auto csv = run({"analyze", file, "--format", "csv"});
  CHECK(csv.out.rfind("# schema=1\n", 0) == 0);
}

TEST_CASE("trees report an infinite systole") {
  const auto file = write_temp("tree.json", R"({"vertices": ["a", "b"], "edges": [{"id": "x", "u": "a", "v": "b", "w": 1}]})");
  const auto r = run({"analyze", file});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["sys"] == "inf");
}

TEST_CASE("input errors exit with 1") {
  CHECK(run({"analyze", write_temp("bad.json", "{not json")}).code == kExitInput);
  CHECK(run({"analyze", "/nonexistent.json"}).code == kExitInput);
  CHECK(run({"analyze", write_temp("disc.json", R"({"vertices": ["a", "b"], "edges": []})")}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"analyze", "x.json", "--format", "xml"}).code == kExitInput);
  CHECK(run({"batch", "--kind", "regular", "--count", "3", "--valence", "5", "--n-max", "5"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("batch output") {
  const auto empty = run({"batch", "--kind", "weighted", "--count", "0"});
  CHECK(empty.code == kExitOk);
  CHECK(empty.out.rfind("# schema=1\nindex,seed,kind,", 0) == 0);
  CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 2);

  const auto a = run({"batch", "--kind", "unit", "--count", "6", "--b-max", "4", "--seed", "5"});
  CHECK(a.code == kExitOk);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 8);
  CHECK(run({"batch", "--kind", "unit", "--count", "6", "--b-max", "4", "--seed", "5"}).out == a.out);
  CHECK(run({"batch", "--kind", "unit", "--count", "6", "--b-max", "4", "--seed", "6"}).out != a.out);
}

TEST_CASE("subshift and optimize") {
  const auto m = write_temp("star.json", matrix_to_json(equality_family(4)).dump());
  const auto s = run({"subshift", m});
  REQUIRE(s.code == kExitOk);
  CHECK(nlohmann::json::parse(s.out)["inequality"]["equality"] == true);

  const auto acyclic = write_temp("acyclic.json", R"({"n": 2, "rows": [[0, 1], [0, 0]]})");
  const auto e = run({"subshift", acyclic});
  CHECK(e.code == kExitInput);
  CHECK(e.err.find("EmptySubshift") != std::string::npos);

  const auto k4 = write_temp("k4o.json", graph_to_json(gen::complete(4)).dump());
  const auto o = run({"optimize", k4});
  REQUIRE(o.code == kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["sigma"].get<double>() == doctest::Approx(2.0));
  CHECK(j["weights"].size() == 6);
  CHECK(j["bs_lower_bound"].get<double>() == doctest::Approx(0.6));
  CHECK(j["active_cycles"].size() > 0);
}

TEST_CASE("generate") {
  const auto g = run({"generate", "--kind", "bouquet", "--b", "3"});
  CHECK(g.code == kExitOk);
  CHECK(parse_graph(g.out).edge_count() == 3);
  CHECK(run({"generate", "--kind", "regular", "--n", "8", "--valence", "3", "--seed", "2"}).code == kExitOk);
  CHECK(run({"generate", "--kind", "bouquet", "--b=-1"}).code == kExitInput);
}
