#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coarsedim/cli.hpp"
#include "coarsedim/error.hpp"

using namespace coarsedim;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "coarsedim_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string writeFile(const std::string& name, const std::string& body) {
  const auto path = scratch(name);
  std::ofstream(path) << body;
  return path.string();
}

RunConfig config(std::string command, std::string action = "") {
  RunConfig c;
  c.command = std::move(command);
  c.action = std::move(action);
  applyBudgetDefaults(c);
  return c;
}

std::string linePoints(Coord hi) {
  std::string csv;
  for (Coord x = 0; x <= hi; ++x) csv += "2;" + std::to_string(x) + "\n";
  return csv;
}

int runArgs(std::vector<std::string> args, std::string& out, std::string& err) {
  args.insert(args.begin(), "coarsedim");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream o, e;
  const int code = runMain(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  err = e.str();
  return code;
}

}  // namespace

TEST_CASE("ord of a family file") {
  RunConfig c = config("ord");
  c.familyPath = writeFile("single.json", R"({"members":[[1]]})");
  const RunOutcome r = run(c);
  CHECK(r.exitCode == kExitOk);
  CHECK(r.report["ord"] == 1);
  CHECK(r.report["tool"] == "coarsedim");
  CHECK(r.report["version"] == COARSEDIM_VERSION);
  CHECK(r.report["config"]["family"] == c.familyPath);
}

TEST_CASE("truncated ord of S_omega") {
  RunConfig c = config("sxi", "trunc-ord");
  c.xi = "w";
  c.n = 4;
  const RunOutcome r = run(c);
  CHECK(r.exitCode == kExitOk);
  CHECK(r.report["ord"] == 3);
  // Singletons 4, pairs 6, and {2,3,4}.
  CHECK(r.report["familySize"] == 11);
}

TEST_CASE("truncated ord table") {
  RunConfig c = config("sxi", "trunc-ord");
  c.xi = R"([{"exp":1,"coef":1}])";
  c.n = 8;
  c.table = true;
  c.csvPath = scratch("table.csv").string();
  const RunOutcome r = run(c);
  CHECK(r.exitCode == kExitOk);
  std::ifstream produced(c.csvPath);
  std::ifstream golden(std::string(COARSEDIM_GOLDEN_DIR) + "/ord_trunc_omega.csv");
  std::stringstream a, b;
  a << produced.rdbuf();
  b << golden.rdbuf();
  CHECK(a.str() == b.str());
}

TEST_CASE("membership verdicts") {
  RunConfig c = config("sxi", "member");
  c.xi = "w";
  c.sigma = "1,2";
  CHECK(run(c).exitCode == kExitOk);
  c.sigma = "1,2,3";
  const RunOutcome r = run(c);
  CHECK(r.exitCode == kExitNegative);
  CHECK(r.report["member"] == false);
  c.xi = "w^";
  CHECK(run(c).exitCode == kExitParseError);
}

TEST_CASE("exhaustive search on the 1-D A_2 instance") {
  RunConfig c = config("cover", "search");
  c.pointsPath = writeFile("line64.csv", linePoints(64));
  c.radii = {4};
  c.bound = 8;
  const RunOutcome r = run(c);
  CHECK(r.exitCode == kExitNegative);
  CHECK(r.report["status"] == "noCover");
  CHECK(r.report["certificate"]["kind"] == "exhaustive");
  CHECK(r.report["certificate"]["points"] == 65);
}

TEST_CASE("found covers re-validate") {
  RunConfig c = config("cover", "search");
  c.pointsPath = writeFile("line64.csv", linePoints(64));
  c.radii = {1, 1};
  c.bound = 8;
  const RunOutcome r = run(c);
  REQUIRE(r.exitCode == kExitOk);
  const std::string coverPath = writeFile("found.json", r.report["cover"].dump());

  RunConfig v = config("cover", "verify");
  v.pointsPath = c.pointsPath;
  v.coverPath = coverPath;
  CHECK(run(v).exitCode == kExitOk);

  v.pointsPath = writeFile("line70.csv", linePoints(70));
  const RunOutcome missing = run(v);
  CHECK(missing.exitCode == kExitNegative);
  CHECK(missing.report["verdict"]["coverage"]["uncovered"]["coords"][0] == 65);
}

TEST_CASE("greedy search is inconclusive on the 2-D truncation") {
  RunConfig e = config("space", "enum");
  e.tau = "2,3";
  e.box = "0:64,0:64";
  e.csvPath = scratch("x23.csv").string();
  const RunOutcome pts = run(e);
  REQUIRE(pts.exitCode == kExitOk);
  CHECK(pts.report["count"] == 3201);

  RunConfig c = config("cover", "search");
  c.pointsPath = e.csvPath;
  c.radii = {4, 8};
  c.bound = 8;
  c.mode = "greedy";
  c.seed = 3;
  const RunOutcome r = run(c);
  CHECK(r.exitCode == kExitInconclusive);
  CHECK(r.report["seed"] == 3);
}

TEST_CASE("a2 verdicts and budgets") {
  RunConfig c = config("cover", "a2");
  c.tau = "2,3";
  c.bound = 8;
  const RunOutcome r = run(c);
  CHECK(r.exitCode == kExitNegative);
  CHECK(r.report["status"] == "noCover");

  c.bound = 16;
  c.nodeBudget = 10;
  CHECK(run(c).exitCode == kExitBudget);

  c.bound = 4;
  c.nodeBudget = 1000;
  CHECK(run(c).exitCode == kExitParseError);

  RunConfig relaxed = config("cover", "a2");
  relaxed.tau = "2";
  relaxed.bound = 8;
  relaxed.radii = {1, 1};
  CHECK(run(relaxed).exitCode == kExitOk);
}

TEST_CASE("refute a greedy candidate") {
  RunConfig a = config("cover", "a2");
  a.tau = "2,3";
  a.bound = 8;
  a.mode = "greedy";
  a.seed = 5;
  const RunOutcome greedy = run(a);
  REQUIRE(greedy.report.contains("partial"));

  RunConfig c = config("partition", "refute");
  c.tau = "2,3";
  c.bound = 8;
  c.coverPath = writeFile("candidate.json", greedy.report["partial"].dump());
  const RunOutcome r = run(c);
  CHECK(r.exitCode == kExitOk);
  CHECK(r.report["status"] == "witness");

  RunConfig e = config("space", "enum");
  e.tau = "2,3";
  e.box = "0:64,0:64";
  e.csvPath = scratch("x23.csv").string();
  run(e);
  const std::string witness = writeFile("witness.csv", [&] {
    const auto& w = r.report["witness"];
    return "2,3;" + std::to_string(w["coords"][0].get<Coord>()) + ";" + std::to_string(w["coords"][1].get<Coord>()) + "\n";
  }());
  RunConfig v = config("cover", "verify");
  v.pointsPath = witness;
  v.coverPath = c.coverPath;
  const RunOutcome check = run(v);
  CHECK(check.exitCode == kExitNegative);
  CHECK(check.report["verdict"].contains("coverage"));
  CHECK_FALSE(check.report["verdict"].contains("disjointness"));
}

TEST_CASE("partition chain command") {
  RunConfig c = config("partition", "chain");
  c.instancePath = writeFile("chain.json",
                             R"({"dimension":1,"side":12,"step":1,"eps":1,"families":[[[[4],[5],[6]]]]})");
  const RunOutcome r = run(c);
  CHECK(r.exitCode == kExitOk);
  CHECK(r.report["status"] == "nonempty");
  c.instancePath = writeFile("chain_bad.json", R"({"dimension":1,"side":12,"step":1,"eps":2,"families":[[]]})");
  CHECK(run(c).exitCode == kExitParseError);
}

TEST_CASE("family and space commands") {
  RunConfig c = config("family", "closure");
  c.familyPath = writeFile("pair.json", R"({"members":[[1,2]]})");
  RunOutcome r = run(c);
  CHECK(r.report["family"]["members"].dump() == "[[1],[1,2],[2]]");
  c.action = "inclusive";
  CHECK(run(c).exitCode == kExitNegative);
  c.action = "reindex";
  c.targets = "4,9";
  CHECK(run(c).report["family"]["members"].dump() == "[[4,9]]");
  c.action = "derive";
  c.sigma = "1";
  CHECK(run(c).report["family"]["members"].dump() == "[[2]]");

  RunConfig d = config("space", "dist");
  d.p = "2;0";
  d.q = "3;0";
  CHECK(run(d).report["distance"] == 8);
}

TEST_CASE("reports are deterministic") {
  RunConfig c = config("cover", "a2");
  c.tau = "2,3";
  c.bound = 8;
  c.mode = "greedy";
  c.seed = 9;
  CHECK(run(c).report.dump() == run(c).report.dump());
}

TEST_CASE("budget environment overrides") {
  setenv("COARSEDIM_NODE_BUDGET", "123", 1);
  RunConfig c;
  applyBudgetDefaults(c);
  CHECK(c.nodeBudget == 123);
  setenv("COARSEDIM_NODE_BUDGET", "-4", 1);
  RunConfig bad;
  CHECK_THROWS_AS(applyBudgetDefaults(bad), ParseError);
  unsetenv("COARSEDIM_NODE_BUDGET");
}

TEST_CASE("argument parsing") {
  std::string out, err;
  CHECK(runArgs({"sxi", "member", "--xi", "w", "--sigma", "1,2", "--json"}, out, err) == kExitOk);
  const Json j = Json::parse(out);
  CHECK(j["member"] == true);
  CHECK(j["command"] == "sxi member");

  CHECK(runArgs({"cover", "search", "--points", writeFile("l16.csv", linePoints(16)), "--radii", "4", "--bound", "2"},
                out, err) == kExitNegative);
  CHECK(runArgs({"cover", "search", "--radii", "4"}, out, err) == kExitParseError);
  CHECK(runArgs({"nonsense"}, out, err) == kExitParseError);

  const std::string report = scratch("report.json").string();
  CHECK(runArgs({"ord", "--family", writeFile("f.json", R"({"members":[[1,2],[3]]})"), "--out", report}, out, err) ==
        kExitOk);
  CHECK(out == "ord = 2\n");
  CHECK(readJsonFile(report)["ord"] == 2);

  CHECK(runArgs({"cover", "a2", "--tau", "2,3", "--bound", "8", "--radii", "4,8", "--json"}, out, err) == kExitNegative);
  CHECK(Json::parse(out)["radii"].dump() == "[4,8]");
}
