#include "polverif/cli.hpp"

#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "polverif/engine.hpp"
#include "polverif/io/render.hpp"
#include "polverif/io/scenario_io.hpp"
#include "polverif/selftest.hpp"

namespace polverif {

namespace {

struct Args {
  std::size_t edge_bound = kDefaultEdgeBound;
  bool json = false;
  std::string file;
  std::string dot_path;
  std::string output_path;
  std::size_t selftest_policies = SelftestOptions{}.policies;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
  if (!f) throw std::runtime_error("cannot write " + path);
}

int cmd_verify(const Args& a, std::ostream& out) {
  const Scenario s = io::load_scenario_file(a.file);
  const VerificationReport report = verify(s, VerifyOptions{a.edge_bound, true});
  if (a.json)
    out << io::report_to_json(report).dump(2) << '\n';
  else
    out << io::render_report_text(report);
  return report.overall ? 0 : 1;
}

int cmd_construct(const Args& a, std::ostream& out) {
  const Scenario s = io::load_scenario_file(a.file);
  const ConstructionResult built =
      construct_max_policy(host_set(s.policy), s.invariants, a.edge_bound);
  const Scenario result{built.policy, s.invariants};
  if (a.json)
    out << io::serialize_scenario(result);
  else
    out << io::render_policy_text(built.policy, built.maximal);
  if (!a.output_path.empty()) write_file(a.output_path, io::serialize_scenario(result));
  if (!a.dot_path.empty()) write_file(a.dot_path, io::export_dot(built.policy));
  return 0;
}

int cmd_diff(const Args& a, std::ostream& out) {
  const Scenario s = io::load_scenario_file(a.file);
  const PolicyDiff d = diff(s, a.edge_bound);
  if (a.json)
    out << io::diff_to_json(d).dump(2) << '\n';
  else
    out << io::render_diff_text(d);
  if (!a.dot_path.empty()) write_file(a.dot_path, io::export_dot(s.policy, d));
  return d.violating.empty() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Verify network security policies against attribute-based security invariants.",
               "polverif"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--edge-bound", a.edge_bound,
                 "Largest flow count for offending-flow enumeration of non-phi templates")
      ->check(CLI::Range(std::size_t{0}, kMaxEdgeBound));
  app.add_flag("--json", a.json, "Machine-readable output");

  auto* verify_cmd = app.add_subcommand("verify", "Check a scenario's policy against its invariants");
  verify_cmd->add_option("file", a.file, "Scenario file")->required();

  auto* construct_cmd =
      app.add_subcommand("construct", "Build the maximal policy permitted by the invariants");
  construct_cmd->add_option("file", a.file, "Scenario file")->required();
  construct_cmd->add_option("-o,--output", a.output_path,
                            "Write the scenario with the constructed policy to this file");
  construct_cmd->add_option("--dot", a.dot_path, "Write the constructed policy as DOT");

  auto* diff_cmd =
      app.add_subcommand("diff", "Compare the policy with the maximal permitted policy");
  diff_cmd->add_option("file", a.file, "Scenario file")->required();
  diff_cmd->add_option("--dot", a.dot_path, "Write the diff as DOT");

  auto* selftest_cmd = app.add_subcommand(
      "selftest", "Randomised law checks on the built-in templates (seed: POLICY_VERIF_SEED)");
  selftest_cmd->add_option("--policies", a.selftest_policies, "Random policies per template");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(a, out);
    if (construct_cmd->parsed()) return cmd_construct(a, out);
    if (diff_cmd->parsed()) return cmd_diff(a, out);
    if (selftest_cmd->parsed())
      return run_selftest({selftest_seed_from_env(), a.selftest_policies}, out) ? 0 : 1;
  } catch (const ScenarioError& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace polverif
