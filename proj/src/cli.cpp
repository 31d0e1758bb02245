#include "coarsedim/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coarsedim/acceptance.hpp"
#include "coarsedim/error.hpp"
#include "coarsedim/finfam.hpp"
#include "coarsedim/partition.hpp"
#include "coarsedim/sfamily.hpp"

namespace coarsedim {

namespace {

template <typename T>
T envNumber(const char* name, T fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::istringstream in(raw);
  T value{};
  if (raw[0] == '-' || !(in >> value) || !in.eof() || value <= 0)
    throw ParseError(std::string(name) + " must be a positive number, got '" + raw + "'");
  return value;
}

Json configEcho(const RunConfig& c) {
  Json j = Json::object();
  auto put = [&](const char* key, const std::string& value) {
    if (!value.empty()) j[key] = value;
  };
  put("family", c.familyPath);
  put("points", c.pointsPath);
  put("cover", c.coverPath);
  put("instance", c.instancePath);
  put("xi", c.xi);
  put("sigma", c.sigma);
  put("targets", c.targets);
  put("tau", c.tau);
  put("box", c.box);
  put("p", c.p);
  put("q", c.q);
  if (!c.radii.empty()) j["radii"] = c.radii;
  if (c.bound != 0) j["bound"] = c.bound;
  if (c.n != 0) j["n"] = c.n;
  if (c.shifted) j["shifted"] = true;
  if (c.table) j["table"] = true;
  if (c.command == "cover" || c.command == "partition") j["mode"] = c.mode;
  if (c.command == "cover" && c.action == "a2") j["probes"] = c.probes;
  j["nodeBudget"] = c.nodeBudget;
  j["enumerationBudget"] = c.enumerationBudget;
  j["timeLimit"] = c.timeLimit;
  put("csv", c.csvPath);
  return j;
}

Ordinal parseXi(const std::string& text) {
  if (text.empty()) throw ParseError("--xi is required");
  const Json j = Json::parse(text, nullptr, false);
  if (!j.is_discarded()) return ordinalFromJson(j);
  try {
    return Ordinal::parse(text);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::vector<LatticePoint> loadPoints(const std::string& path) {
  if (path.empty()) throw ParseError("--points is required");
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return readPointsCsv(in);
}

LatticePoint parsePointRow(const std::string& row, const char* flag) {
  if (row.empty()) throw ParseError(std::string(flag) + " is required");
  std::istringstream in(row);
  auto points = readPointsCsv(in);
  if (points.size() != 1) throw ParseError(std::string(flag) + " must be one point like 2,3;0;4");
  return points.front();
}

const char* statusName(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::noCover: return "noCover";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* verdictName(A2Verdict v) {
  switch (v) {
    case A2Verdict::cover: return "cover";
    case A2Verdict::noCover: return "noCover";
    case A2Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SearchMode parseMode(const std::string& mode) {
  if (mode == "exhaustive") return SearchMode::exhaustive;
  if (mode == "greedy") return SearchMode::greedy;
  throw ParseError("--mode must be exhaustive or greedy, got '" + mode + "'");
}

Json verdictJson(const CoverVerdict& v) {
  Json j = Json::object();
  j["ok"] = v.ok();
  if (v.malformed) j["malformed"] = *v.malformed;
  if (v.disjointness) {
    const auto& d = *v.disjointness;
    j["disjointness"] = {{"family", d.family}, {"blockA", d.blockA}, {"blockB", d.blockB},
                         {"a", pointToJson(d.a)}, {"b", pointToJson(d.b)}, {"distance", d.distance}};
  }
  if (v.diameter) {
    const auto& d = *v.diameter;
    j["diameter"] = {{"family", d.family}, {"block", d.block}, {"a", pointToJson(d.a)},
                     {"b", pointToJson(d.b)}, {"diameter", d.diameter}};
  }
  if (v.coverage) j["coverage"] = {{"uncovered", pointToJson(v.coverage->point)}};
  return j;
}

void writeCsv(const std::string& path, const std::string& body) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << body;
}

struct Context {
  const RunConfig& config;
  RunOutcome& outcome;
  Json& report() { return outcome.report; }
  void line(const std::string& s) { outcome.text += s + "\n"; }
};

void runOrd(Context& ctx) {
  if (ctx.config.familyPath.empty()) throw ParseError("--family is required");
  const ExplicitFamily family = familyFromJson(readJsonFile(ctx.config.familyPath));
  const std::uint64_t value = ord(family);
  ctx.report()["ord"] = value;
  ctx.report()["members"] = family.size();
  ctx.line("ord = " + std::to_string(value));
}

void runFamily(Context& ctx) {
  const RunConfig& c = ctx.config;
  if (c.familyPath.empty()) throw ParseError("--family is required");
  const ExplicitFamily family = familyFromJson(readJsonFile(c.familyPath));
  ExplicitFamily result;
  if (c.action == "inclusive") {
    const bool inclusive = isInclusive(family);
    ctx.report()["inclusive"] = inclusive;
    ctx.line(inclusive ? "inclusive" : "not inclusive");
    if (!inclusive) ctx.outcome.exitCode = kExitNegative;
    return;
  }
  if (c.action == "closure") {
    result = inclusiveClosure(family);
  } else if (c.action == "derive") {
    if (c.sigma.empty()) throw ParseError("--sigma is required");
    result = derive(family, parseFinSet(c.sigma));
  } else if (c.action == "reindex") {
    if (c.targets.empty()) throw ParseError("--targets is required");
    const FinSet targets = parseFinSet(c.targets);
    result = reindex(family, targets.elements());
  }
  ctx.report()["family"] = familyToJson(result);
  ctx.report()["ord"] = ord(result);
  ctx.line(result.toString());
}

void runSxi(Context& ctx) {
  const RunConfig& c = ctx.config;
  const Ordinal xi = parseXi(c.xi);
  ctx.report()["xi"] = ordinalToJson(xi);
  if (c.action == "member") {
    if (c.sigma.empty()) throw ParseError("--sigma is required");
    const FinSet sigma = parseFinSet(c.sigma);
    const bool member = c.shifted ? sMemberShifted(sigma, xi) : sMember(sigma, xi);
    ctx.report()["member"] = member;
    ctx.line(sigma.toString() + (member ? " is" : " is not") + " a member for xi = " + xi.toString());
    if (!member) ctx.outcome.exitCode = kExitNegative;
    return;
  }
  if (c.n == 0) throw ParseError("--n must be positive");
  if (c.table) {
    Json rows = Json::array();
    std::string csv = "N,ord\n";
    for (unsigned bound = 1; bound <= c.n; ++bound) {
      const std::uint64_t value = ordTruncated(xi, bound);
      rows.push_back({{"N", bound}, {"ord", value}});
      csv += std::to_string(bound) + "," + std::to_string(value) + "\n";
    }
    ctx.report()["table"] = std::move(rows);
    writeCsv(c.csvPath, csv);
    ctx.outcome.text += csv;
    return;
  }
  const STruncation t = truncate(xi, c.n);
  const std::uint64_t value = ord(t.family);
  ctx.report()["ord"] = value;
  ctx.report()["familySize"] = t.family.size();
  ctx.line("ord = " + std::to_string(value) + " on " + std::to_string(t.family.size()) + " members");
}

void runSpace(Context& ctx) {
  const RunConfig& c = ctx.config;
  if (c.action == "enum") {
    if (c.tau.empty() || c.box.empty()) throw ParseError("--tau and --box are required");
    const TauLabel tau = parseTau(c.tau);
    const auto points = enumerateXTau(tau, parseBox(c.box), c.enumerationBudget);
    std::ostringstream csv;
    writePointsCsv(csv, points);
    Json list = Json::array();
    for (const auto& p : points) list.push_back(pointToJson(p));
    ctx.report()["count"] = points.size();
    ctx.report()["points"] = std::move(list);
    writeCsv(c.csvPath, csv.str());
    ctx.outcome.text += csv.str();
    return;
  }
  const LatticePoint p = parsePointRow(c.p, "--p");
  const LatticePoint q = parsePointRow(c.q, "--q");
  const Coord d = dXi(p, q);
  ctx.report()["distance"] = d;
  ctx.report()["sameLabel"] = p.label() == q.label();
  ctx.line("d = " + std::to_string(d));
}

void runCover(Context& ctx) {
  const RunConfig& c = ctx.config;
  if (c.action == "verify") {
    if (c.coverPath.empty()) throw ParseError("--cover is required");
    const auto points = loadPoints(c.pointsPath);
    const CoverSpec spec = coverFromJson(readJsonFile(c.coverPath));
    const CoverVerdict verdict = verifyCover(spec, points);
    ctx.report()["status"] = verdict.ok() ? "valid" : "invalid";
    ctx.report()["verdict"] = verdictJson(verdict);
    ctx.line(verdict.ok() ? "valid cover" : "invalid cover: " + ctx.report()["verdict"].dump());
    if (!verdict.ok()) ctx.outcome.exitCode = kExitNegative;
    return;
  }

  if (c.action == "search") {
    if (c.radii.empty()) throw ParseError("--radii is required");
    if (c.bound <= 0) throw ParseError("--bound must be positive");
    const auto points = loadPoints(c.pointsPath);
    SearchOptions options{parseMode(c.mode), c.nodeBudget, c.seed, c.timeLimit};
    const SearchResult r = searchCover(points, c.radii, c.bound, options);
    ctx.report()["status"] = statusName(r.status);
    ctx.report()["points"] = points.size();
    ctx.report()["nodes"] = r.nodes;
    if (r.cover) ctx.report()["cover"] = coverToJson(*r.cover);
    if (!r.uncovered.empty()) {
      Json list = Json::array();
      for (const auto& p : r.uncovered) list.push_back(pointToJson(p));
      ctx.report()["uncovered"] = std::move(list);
    }
    if (r.status == SearchStatus::noCover) {
      ctx.report()["certificate"] = {{"kind", "exhaustive"}, {"nodes", r.nodes}, {"points", points.size()}};
      ctx.outcome.exitCode = kExitNegative;
    } else if (r.status == SearchStatus::inconclusive) {
      ctx.outcome.exitCode = kExitInconclusive;
    }
    ctx.line(std::string(statusName(r.status)) + " after " + std::to_string(r.nodes) + " nodes");
    return;
  }

  if (c.tau.empty()) throw ParseError("--tau is required");
  if (c.bound <= 0) throw ParseError("--bound must be positive");
  const TauLabel tau = parseTau(c.tau);
  A2Options options;
  options.mode = parseMode(c.mode);
  options.nodeBudget = c.nodeBudget;
  options.probes = c.probes;
  options.seed = c.seed;
  options.timeLimit = c.timeLimit;
  if (!c.radii.empty()) options.radii = c.radii;
  const A2Result r = a2Check(tau, c.bound, options);
  ctx.report()["status"] = verdictName(r.verdict);
  ctx.report()["radii"] = r.radii;
  ctx.report()["truncationPoints"] = r.truncationPoints;
  Json probes = Json::array();
  for (const auto& p : r.probes) {
    Json entry = {{"window", p.window}, {"spacing", p.spacing}, {"points", p.points}, {"nodes", p.nodes}};
    entry["status"] = p.status ? statusName(*p.status) : "budgetExceeded";
    probes.push_back(std::move(entry));
  }
  ctx.report()["probes"] = std::move(probes);
  if (r.cover) ctx.report()["cover"] = coverToJson(*r.cover);
  if (r.partial && !r.cover) ctx.report()["partial"] = coverToJson(*r.partial);
  if (r.verdict == A2Verdict::noCover) ctx.outcome.exitCode = kExitNegative;
  if (r.verdict == A2Verdict::inconclusive) ctx.outcome.exitCode = kExitInconclusive;
  ctx.line(std::string(verdictName(r.verdict)) + " for tau {" + tau.toString() + "}, B = " + std::to_string(c.bound));
}

void runPartition(Context& ctx) {
  const RunConfig& c = ctx.config;
  if (c.action == "chain") {
    if (c.instancePath.empty()) throw ParseError("--instance is required");
    const PartitionInstance instance = partitionFromJson(readJsonFile(c.instancePath));
    const ChainState state = epsilonPartitionChain(instance.cube, instance.families, instance.eps);
    Json levels = Json::array();
    for (const auto& level : state.levels) levels.push_back(level.size());
    Json steps = Json::array();
    for (const auto& s : state.steps)
      steps.push_back({{"nearPlus", s.nearPlus}, {"farFromPlus", s.farFromPlus}, {"removedPlusSide", s.removedPlusSide},
                       {"removedMinusSide", s.removedMinusSide}, {"remaining", s.remaining}});
    const bool ok = state.finalNonempty() && state.counterexamples.empty();
    ctx.report()["status"] = ok ? "nonempty" : "defect";
    ctx.report()["resolution"] = ChainState::kResolution;
    ctx.report()["levelSizes"] = std::move(levels);
    ctx.report()["steps"] = std::move(steps);
    ctx.report()["counterexamples"] = state.counterexamples;
    ctx.report()["finalLevel"] = state.levels.back();
    ctx.line("|L_n| = " + std::to_string(state.levels.back().size()) + " (coordinates in thirds)");
    for (const auto& s : state.counterexamples) ctx.line("defect: " + s);
    if (!ok) ctx.outcome.exitCode = kExitNegative;
    return;
  }
  if (c.tau.empty() || c.coverPath.empty()) throw ParseError("--tau and --cover are required");
  if (c.bound <= 0) throw ParseError("--bound must be positive");
  const TauLabel tau = parseTau(c.tau);
  const CoverSpec candidate = coverFromJson(readJsonFile(c.coverPath));
  const RefuteResult r = skeletonRefute(tau, c.bound, candidate);
  if (r.failure) {
    ctx.report()["status"] = "rejected";
    ctx.report()["failure"] = *r.failure;
    ctx.line("rejected: " + *r.failure);
    ctx.outcome.exitCode = kExitParseError;
    return;
  }
  ctx.report()["status"] = "witness";
  ctx.report()["witness"] = pointToJson(*r.witness);
  ctx.report()["paddedBound"] = r.bound;
  ctx.report()["survivors"] = r.survivors.size();
  ctx.report()["partitionSizes"] = r.partitionSizes;
  ctx.report()["skeletonSizes"] = r.skeletonSizes;
  ctx.line("uncovered witness " + r.witness->toString());
}

void runSelftest(Context& ctx) {
  AcceptanceOptions options;
  if (ctx.config.seed != 0) options.seed = ctx.config.seed;
  options.nodeBudget = ctx.config.nodeBudget;
  ctx.report()["seed"] = options.seed;
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : runAcceptance(options)) {
    all = all && r.pass;
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                        {"seconds", r.seconds}, {"limitSeconds", r.limitSeconds}});
    ctx.line(formatCriterion(r));
  }
  ctx.report()["criteria"] = std::move(criteria);
  ctx.report()["status"] = all ? "pass" : "fail";
  if (!all) ctx.outcome.exitCode = kExitNegative;
}

}  // namespace

void applyBudgetDefaults(RunConfig& config) {
  if (config.nodeBudget == 0) config.nodeBudget = envNumber<std::uint64_t>("COARSEDIM_NODE_BUDGET", kDefaultNodeBudget);
  if (config.enumerationBudget == 0)
    config.enumerationBudget = envNumber<std::uint64_t>("COARSEDIM_ENUM_BUDGET", kDefaultEnumerationBudget);
  if (config.timeLimit == 0) config.timeLimit = envNumber<double>("COARSEDIM_TIME_LIMIT", 0.0);
  if (config.timeLimit < 0) throw ParseError("time limit must not be negative");
}

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  Json& report = outcome.report;
  report["tool"] = "coarsedim";
  report["version"] = COARSEDIM_VERSION;
  report["command"] = config.action.empty() ? config.command : config.command + " " + config.action;
  report["config"] = configEcho(config);
  report["seed"] = config.seed;

  Context ctx{config, outcome};
  try {
    if (config.command == "ord") runOrd(ctx);
    else if (config.command == "family") runFamily(ctx);
    else if (config.command == "sxi") runSxi(ctx);
    else if (config.command == "space") runSpace(ctx);
    else if (config.command == "cover") runCover(ctx);
    else if (config.command == "partition") runPartition(ctx);
    else if (config.command == "selftest") runSelftest(ctx);
    else throw ParseError("unknown command '" + config.command + "'");
  } catch (const BudgetExceeded& e) {
    outcome.exitCode = kExitBudget;
    report["status"] = "budgetExceeded";
    report["error"] = e.what();
    outcome.text += std::string("budget exceeded: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    outcome.exitCode = kExitParseError;
    report["status"] = "error";
    report["error"] = e.what();
    outcome.text += std::string("error: ") + e.what() + "\n";
  }
  report["exitCode"] = outcome.exitCode;
  return outcome;
}

int runMain(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinals, S_xi families, lattice spaces X_tau and cover refutations"};
  app.set_version_flag("--version", std::string(COARSEDIM_VERSION));
  app.require_subcommand(1);
  RunConfig config;

  auto common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", config.json, "Print the JSON report instead of text");
    cmd->add_option("--out", config.outPath, "Write the JSON report to this file");
    cmd->add_option("--seed", config.seed, "Seed for randomized steps");
    cmd->add_option("--node-budget", config.nodeBudget, "Search node cap")->check(CLI::PositiveNumber);
    cmd->add_option("--enum-budget", config.enumerationBudget, "Enumeration cap")->check(CLI::PositiveNumber);
    cmd->add_option("--time-limit", config.timeLimit, "Seconds per exhaustive search")->check(CLI::PositiveNumber);
  };
  auto action = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    cmd->callback([&config, parent, name] {
      config.command = parent->get_name();
      config.action = name;
    });
    common(cmd);
    return cmd;
  };

  CLI::App* ordCmd = app.add_subcommand("ord", "Ord of a family file");
  ordCmd->add_option("--family", config.familyPath, "Family JSON")->required();
  ordCmd->callback([&] { config.command = "ord"; });
  common(ordCmd);

  CLI::App* familyCmd = app.add_subcommand("family", "Family operations");
  familyCmd->require_subcommand(1);
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"closure", "Inclusive closure"}, {"inclusive", "Test inclusivity"},
           {"derive", "Derivation by --sigma"}, {"reindex", "Order-preserving reindex onto --targets"}}) {
    CLI::App* cmd = action(familyCmd, name, help);
    cmd->add_option("--family", config.familyPath, "Family JSON")->required();
    if (name == "derive") cmd->add_option("--sigma", config.sigma, "Set like 1,3")->required();
    if (name == "reindex") cmd->add_option("--targets", config.targets, "Increasing targets like 2,5,9")->required();
  }

  CLI::App* sxiCmd = app.add_subcommand("sxi", "S_xi membership and truncations");
  sxiCmd->require_subcommand(1);
  CLI::App* member = action(sxiCmd, "member", "Is sigma in S_xi");
  member->add_option("--xi", config.xi, "Ordinal: JSON or text like w^2+w*3+1")->required();
  member->add_option("--sigma", config.sigma, "Set like 2,3,4")->required();
  member->add_flag("--shifted", config.shifted, "Test membership in S_xi[L] (elements shifted by 2)");
  CLI::App* truncOrd = action(sxiCmd, "trunc-ord", "Ord of S_xi restricted to {1..n}");
  truncOrd->add_option("--xi", config.xi, "Ordinal: JSON or text")->required();
  truncOrd->add_option("--n", config.n, "Truncation bound")->required();
  truncOrd->add_flag("--table", config.table, "Emit the table N,ord for N = 1..n");
  truncOrd->add_option("--csv", config.csvPath, "Write the table as CSV");

  CLI::App* spaceCmd = app.add_subcommand("space", "Lattice spaces X_tau");
  spaceCmd->require_subcommand(1);
  CLI::App* enumCmd = action(spaceCmd, "enum", "Enumerate X_tau in a box");
  enumCmd->add_option("--tau", config.tau, "Label like 2,3")->required();
  enumCmd->add_option("--box", config.box, "Ranges like 0:8,0:8")->required();
  enumCmd->add_option("--csv", config.csvPath, "Write the points as CSV");
  CLI::App* distCmd = action(spaceCmd, "dist", "d_xi between two points");
  distCmd->add_option("--p", config.p, "Point like 2,3;0;4")->required();
  distCmd->add_option("--q", config.q, "Point like 2;4")->required();

  CLI::App* coverCmd = app.add_subcommand("cover", "Cover verification and search");
  coverCmd->require_subcommand(1);
  CLI::App* verify = action(coverCmd, "verify", "Check a cover against a point cloud");
  verify->add_option("--points", config.pointsPath, "Point CSV")->required();
  verify->add_option("--cover", config.coverPath, "Cover JSON")->required();
  CLI::App* search = action(coverCmd, "search", "Search for a cover of a point cloud");
  search->add_option("--points", config.pointsPath, "Point CSV")->required();
  search->add_option("--radii", config.radii, "Radii like 4,8")->required()->delimiter(',');
  search->add_option("--bound", config.bound, "Diameter bound")->required();
  search->add_option("--mode", config.mode, "exhaustive or greedy");
  CLI::App* a2 = action(coverCmd, "a2", "A_2 check on X_tau within [0,8B]^{m+1}");
  a2->add_option("--tau", config.tau, "Label like 2,3")->required();
  a2->add_option("--bound", config.bound, "Diameter bound B")->required();
  a2->add_option("--mode", config.mode, "exhaustive or greedy");
  a2->add_option("--radii", config.radii, "Override the A_2 radii")->delimiter(',');
  bool noProbes = false;
  a2->add_flag("--no-probes", noProbes, "Search only the full truncation");

  CLI::App* partitionCmd = app.add_subcommand("partition", "eps-partition chains and skeleton refutation");
  partitionCmd->require_subcommand(1);
  CLI::App* chain = action(partitionCmd, "chain", "Build the eps-partition chain of an instance");
  chain->add_option("--instance", config.instancePath, "Partition instance JSON")->required();
  CLI::App* refute = action(partitionCmd, "refute", "Find a point a candidate cover misses");
  refute->add_option("--tau", config.tau, "Label like 2,3")->required();
  refute->add_option("--bound", config.bound, "Diameter bound B")->required();
  refute->add_option("--cover", config.coverPath, "Candidate cover JSON")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->callback([&] { config.command = "selftest"; });
  common(selftest);

  try {
    app.parse(argc, argv);
    config.probes = !noProbes;
    applyBudgetDefaults(config);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  const RunOutcome outcome = run(config);
  const std::string json = outcome.report.dump(2) + "\n";
  if (!config.outPath.empty()) {
    std::ofstream file(config.outPath, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << config.outPath << "'\n";
      return kExitParseError;
    }
    file << json;
  }
  if (config.json) {
    out << json;
  } else {
    (outcome.exitCode == kExitParseError || outcome.exitCode == kExitBudget ? err : out) << outcome.text;
  }
  return outcome.exitCode;
}

}  // namespace coarsedim
