#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "polverif/cli.hpp"
#include "polverif/engine.hpp"
#include "polverif/io/scenario_io.hpp"

using namespace polverif;

namespace {

const std::string kScenarios = POLVERIF_SCENARIO_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "polverif");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("polverif_cli_test_" + name);
}

}  // namespace

TEST_CASE("verify exit codes") {
  auto ok = run({"verify", kScenarios + "/cabin.json"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("overall: all invariants hold") != std::string::npos);

  auto bad = run({"verify", kScenarios + "/cabin_bad.json"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("[FAIL] Security Gateway") != std::string::npos);
  CHECK(bad.out.find("{(IFE1, IFE2)}") != std::string::npos);

  auto missing = run({"verify", "nosuchfile"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("IoError") != std::string::npos);
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"--edge-bound", "99", "verify", kScenarios + "/cabin.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("load errors exit 2 with the error kind") {
  const auto path = temp_path("unknown_host.json");
  std::ofstream(path) << R"({"hosts": ["IFE1"], "invariants": [
      {"template": "security_gateway", "attributes": {"IFE3": "memb"}}]})";
  auto r = run({"verify", path.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("UnknownHost") != std::string::npos);
  CHECK(r.err.find("IFE3") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("json report") {
  auto r = run({"--json", "verify", kScenarios + "/cabin_bad.json"});
  CHECK(r.code == 1);
  auto j = io::Json::parse(r.out);
  CHECK(j["overall"] == false);
  CHECK(j["invariants"].size() == 3);
  // Options after the subcommand are accepted too.
  CHECK(run({"verify", kScenarios + "/cabin_bad.json", "--json"}).out == r.out);
}

TEST_CASE("construct writes a verifiable scenario") {
  const auto out = temp_path("constructed.json");
  const auto dot = temp_path("constructed.dot");
  auto r = run({"construct", kScenarios + "/cabin_invariants.json", "-o", out.string(), "--dot",
                dot.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("flows, in-host flows omitted (23)") != std::string::npos);
  CHECK(run({"verify", out.string()}).code == 0);
  const Scenario built = io::load_scenario_file(out);
  const Scenario golden = io::load_scenario_file(kScenarios + "/cabin.json");
  CHECK(diff(built.policy, golden.invariants).violating.empty());
  CHECK(diff(golden.policy, built.invariants).permitted_missing.empty());
  CHECK(std::filesystem::file_size(dot) > 0);
  std::filesystem::remove(out);
  std::filesystem::remove(dot);

  auto j = run({"--json", "construct", kScenarios + "/cabin_invariants.json"});
  CHECK(j.code == 0);
  CHECK(io::parse_scenario(j.out).policy.flow_count() == 23 + 10);
}

TEST_CASE("diff") {
  const auto dot = temp_path("diff.dot");
  auto r = run({"diff", kScenarios + "/cabin_user.json", "--dot", dot.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("P1 -> IFE1") != std::string::npos);
  CHECK(r.out.find("Wifi -> SAT") != std::string::npos);
  std::ifstream in(dot);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str().find("\"Wifi\" -> \"SAT\" [style=dashed];") != std::string::npos);
  std::filesystem::remove(dot);
  CHECK(run({"diff", kScenarios + "/cabin.json"}).code == 0);
}

TEST_CASE("selftest") {
  auto r = run({"selftest", "--policies", "20"});
  CHECK(r.code == 0);
  CHECK_FALSE(r.out.empty());
}
