#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "polverif/engine.hpp"
#include "polverif/io/scenario_io.hpp"
#include "polverif/sampling.hpp"
#include "polverif/templates.hpp"
#include "test_templates.hpp"

using namespace polverif;
using namespace polverif::templates;
using polverif::testing::fl;
using polverif::testing::hid;
using polverif::testing::Reach;

namespace {

const std::string kScenarios = POLVERIF_SCENARIO_DIR;

// Cabin attributes written out as plain strings and an independent reading
// of each template's per-flow rule.
struct CabinRow {
  std::string level;  // dotted, most specific first
  int dom_trust;
  int sc;  // 0 unclassified .. 3 topsecret
  bool blp_trusted;
  std::string role;
};

const std::map<std::string, CabinRow>& cabin_rows() {
  static const std::map<std::string, CabinRow> rows = {
      {"CC", {"crew.aircraft", 1, 2, false, "default"}},
      {"C1", {"crew.aircraft", 0, 2, false, "default"}},
      {"C2", {"crew.aircraft", 0, 2, false, "default"}},
      {"IFEsrv", {"entertain.aircraft", 0, 0, true, "sgwa"}},
      {"IFE1", {"entertain.aircraft", 0, 1, false, "memb"}},
      {"IFE2", {"entertain.aircraft", 0, 1, false, "memb"}},
      {"SAT", {"INET.entertain.aircraft", 0, 0, false, "default"}},
      {"Wifi", {"POD.entertain.aircraft", 1, 0, false, "default"}},
      {"P1", {"POD.entertain.aircraft", 0, 0, false, "default"}},
      {"P2", {"POD.entertain.aircraft", 0, 0, false, "default"}},
  };
  return rows;
}

bool domain_ok(const CabinRow& s, const CabinRow& r) {
  // Drop `trust` leading labels from the sender; receiver must end with what is left.
  std::string lifted = s.level;
  for (int i = 0; i < s.dom_trust; ++i) {
    auto dot = lifted.find('.');
    if (dot == std::string::npos) return true;
    lifted = lifted.substr(dot + 1);
  }
  if (r.level == lifted) return true;
  return r.level.size() > lifted.size() &&
         r.level.compare(r.level.size() - lifted.size() - 1, std::string::npos, "." + lifted) == 0;
}

bool gateway_ok(const CabinRow& s, const CabinRow& r) {
  if (s.role == "sgw" || s.role == "sgwa") return true;
  if (s.role == "memb") return r.role != "memb";
  return r.role == "sgwa" || r.role == "default";
}

bool blp_ok(const CabinRow& s, const CabinRow& r) { return r.blp_trusted || s.sc <= r.sc; }

std::set<Flow> cabin_oracle() {
  std::set<Flow> out;
  for (const auto& [a, ra] : cabin_rows())
    for (const auto& [b, rb] : cabin_rows())
      if (a != b && domain_ok(ra, rb) && gateway_ok(ra, rb) && blp_ok(ra, rb))
        out.insert(Flow{HostId(a), HostId(b)});
  return out;
}

std::set<Flow> inter_host(const Policy& p) {
  std::set<Flow> out;
  for (const Flow& f : p.flows())
    if (!f.reflexive()) out.insert(f);
  return out;
}

std::vector<AnyInvariant> contradictory_blp() {
  std::vector<AnyInvariant> out;
  out.emplace_back(InvariantInstance<Clearance>{
      blp_basic(), {{hid("a"), Clearance::secret}, {hid("b"), Clearance::unclassified}}, ""});
  out.emplace_back(InvariantInstance<Clearance>{
      blp_basic(), {{hid("b"), Clearance::secret}, {hid("a"), Clearance::unclassified}}, ""});
  return out;
}

// A random all-phi invariant list over the given hosts.
std::vector<AnyInvariant> random_phi_invariants(std::mt19937_64& rng, const Policy& g) {
  std::vector<AnyInvariant> out;
  std::uniform_int_distribution<int> count(0, 4), kind(0, 3);
  const auto dom = dom_attr_fragment({"a", "b"}, 2, 1);
  for (int n = count(rng); n > 0; --n) {
    switch (kind(rng)) {
      case 0:
        out.emplace_back(InvariantInstance<Clearance>{
            blp_basic(), random_config(rng, g.hosts(), all_clearances(), 0.5), ""});
        break;
      case 1:
        out.emplace_back(InvariantInstance<BlpTrustAttr>{
            blp_trust(), random_config(rng, g.hosts(), all_blp_trust_attrs(), 0.5), ""});
        break;
      case 2:
        out.emplace_back(InvariantInstance<DomAttr>{
            domain_hierarchy(), random_config(rng, g.hosts(), dom, 0.5), ""});
        break;
      default:
        out.emplace_back(InvariantInstance<SgwRole>{
            security_gateway(), random_config(rng, g.hosts(), all_sgw_roles(), 0.5), ""});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("cabin construction matches the per-edge oracle") {
  Scenario s = io::load_scenario_file(kScenarios + "/cabin_invariants.json");
  REQUIRE(s.policy.host_count() == 10);
  REQUIRE(s.invariants.size() == 3);
  auto built = construct_max_policy(host_set(s.policy), s.invariants);
  CHECK(built.maximal);
  CHECK(inter_host(built.policy) == cabin_oracle());
  for (const HostId& h : built.policy.hosts()) CHECK(built.policy.has_flow(Flow{h, h}));

  for (auto [a, b] : {std::pair{"Wifi", "SAT"}, {"CC", "IFEsrv"}, {"IFEsrv", "SAT"},
                      {"IFE1", "IFEsrv"}, {"IFEsrv", "IFE1"}, {"C1", "CC"}})
    CHECK(built.policy.has_flow(fl(a, b)));
  for (auto [a, b] : {std::pair{"SAT", "Wifi"}, {"P1", "IFEsrv"}, {"IFE1", "IFE2"}, {"CC", "IFE1"}})
    CHECK_FALSE(built.policy.has_flow(fl(a, b)));

  auto report = verify(Scenario{built.policy, s.invariants});
  CHECK(report.overall);
  for (const auto& r : report.invariants) {
    CHECK(r.holds);
    CHECK(r.offending.empty());
  }
}

TEST_CASE("shipped cabin policy is the constructed one") {
  Scenario golden = io::load_scenario_file(kScenarios + "/cabin.json");
  CHECK(inter_host(golden.policy) == cabin_oracle());
  CHECK(verify(golden).overall);
}

TEST_CASE("cabin with a direct member link") {
  Scenario s = io::load_scenario_file(kScenarios + "/cabin_bad.json");
  auto report = verify(s);
  CHECK_FALSE(report.overall);
  int failing = 0;
  for (const auto& r : report.invariants) {
    if (r.holds) continue;
    ++failing;
    CHECK(r.template_name == "Security Gateway");
    CHECK(r.offending == std::vector<OffendingFlowSet>{{{fl("IFE1", "IFE2")}}});
    CHECK(r.offender_hosts == std::set<HostId>{hid("IFE1")});
  }
  CHECK(failing == 1);
}

TEST_CASE("verify with no invariants") {
  auto report = verify(Scenario{allow_all({hid("a")}), {}});
  CHECK(report.overall);
  CHECK(report.invariants.empty());
}

TEST_CASE("parallel and sequential verification give the same report") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 40; ++i) {
    const Policy g = random_policy(rng, 1, 5, 12);
    Scenario s{g, random_phi_invariants(rng, g)};
    auto a = verify(s, {kDefaultEdgeBound, false});
    auto b = verify(s, {kDefaultEdgeBound, true});
    REQUIRE(a.invariants.size() == b.invariants.size());
    CHECK(a.overall == b.overall);
    for (std::size_t k = 0; k < a.invariants.size(); ++k) {
      CHECK(a.invariants[k].name == b.invariants[k].name);
      CHECK(a.invariants[k].holds == b.invariants[k].holds);
      CHECK(a.invariants[k].offending == b.invariants[k].offending);
      CHECK(a.invariants[k].offender_hosts == b.invariants[k].offender_hosts);
    }
  }
}

TEST_CASE("report invariants") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 60; ++i) {
    const Policy g = random_policy(rng, 1, 5, 12);
    auto report = verify(Scenario{g, random_phi_invariants(rng, g)});
    bool all = true;
    for (const auto& r : report.invariants) {
      all = all && r.holds;
      CHECK(r.offending.empty() == r.holds);
    }
    CHECK(report.overall == all);
  }
}

TEST_CASE("verify propagates TooLarge for non-phi invariants") {
  const Policy big = allow_all(numbered_hosts(5));
  std::vector<AnyInvariant> invs;
  invs.emplace_back(InvariantInstance<Reach>{polverif::testing::no_transitive_access(),
                                             {{hid("h0"), Reach::src}, {hid("h1"), Reach::snk}}, ""});
  CHECK_THROWS_AS(verify(Scenario{big, invs}), TooLarge);
}

TEST_CASE("construction: no invariants gives allow-all") {
  auto hosts = numbered_hosts(4);
  auto r = construct_max_policy(hosts, {});
  CHECK(r.policy == allow_all(hosts));
  CHECK(r.maximal);
  CHECK(construct_max_policy({}, {}).policy == Policy());
}

TEST_CASE("construction: contradictory invariants leave only in-host flows") {
  auto r = construct_max_policy({hid("a"), hid("b")}, contradictory_blp());
  CHECK(r.policy.flows() == std::vector<Flow>{fl("a", "a"), fl("b", "b")});
  CHECK(r.maximal);
}

TEST_CASE("construction is sound, complete and order independent for phi invariants") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 150; ++i) {
    const Policy g = random_policy(rng, 1, 5, 0);
    auto invs = random_phi_invariants(rng, g);
    const auto hosts = host_set(g);
    auto r = construct_max_policy(hosts, invs);
    CHECK(r.maximal);
    CHECK(compose(invs, r.policy));
    for (const HostId& h : hosts) CHECK(r.policy.has_flow(Flow{h, h}));
    const Policy all = allow_all(hosts);
    for (const Flow& f : all.flows()) {
      if (r.policy.has_flow(f)) continue;
      CHECK_FALSE(compose(invs, r.policy.with(std::vector<Flow>{f})));
    }
    auto shuffled = invs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(construct_max_policy(hosts, shuffled).policy == r.policy);
  }
}

TEST_CASE("construction with a non-phi invariant is sound and flagged") {
  std::vector<AnyInvariant> invs;
  invs.emplace_back(InvariantInstance<Reach>{
      polverif::testing::no_transitive_access(),
      {{hid("v1"), Reach::src}, {hid("v2"), Reach::none}, {hid("v3"), Reach::snk}}, ""});
  const std::set<HostId> v{hid("v1"), hid("v2"), hid("v3")};
  // allow-all has 9 flows, within the default bound.
  auto r = construct_max_policy(v, invs);
  CHECK_FALSE(r.maximal);
  CHECK(compose(invs, r.policy));
  CHECK_FALSE(r.policy.has_flow(fl("v1", "v3")));

  std::mt19937_64 rng(73);
  for (int i = 0; i < 60; ++i) {
    auto hosts = numbered_hosts(std::uniform_int_distribution<int>(1, 3)(rng));
    std::vector<HostId> hv(hosts.begin(), hosts.end());
    std::vector<AnyInvariant> mixed;
    mixed.emplace_back(InvariantInstance<Reach>{
        polverif::testing::no_transitive_access(),
        random_config(rng, hv, std::vector<Reach>{Reach::none, Reach::snk}, 0.8), ""});
    mixed.emplace_back(InvariantInstance<Clearance>{blp_basic(), random_config(rng, hv, all_clearances()), ""});
    auto out = construct_max_policy(hosts, mixed);
    CHECK(compose(mixed, out.policy));
  }
}

TEST_CASE("construction refuses invariants that cannot be repaired") {
  std::vector<AnyInvariant> invs;
  invs.emplace_back(InvariantInstance<bool>{polverif::testing::poisoned_hosts(), {{hid("a"), true}}, ""});
  CHECK_THROWS_AS(construct_max_policy({hid("a"), hid("b")}, invs), ConstructionError);
}

TEST_CASE("cabin diff") {
  Scenario s = io::load_scenario_file(kScenarios + "/cabin_user.json");
  auto d = diff(s);
  CHECK(d.violating == std::vector<Flow>{fl("P1", "IFE1")});
  CHECK(d.permitted_missing == std::vector<Flow>{fl("Wifi", "SAT")});
  CHECK(d.reference_maximal);
}

TEST_CASE("diff of the maximal policy against itself is empty") {
  Scenario s = io::load_scenario_file(kScenarios + "/cabin.json");
  auto d = diff(s);
  CHECK(d.violating.empty());
  CHECK(d.permitted_missing.empty());
}

TEST_CASE("diff partitions the policy") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 150; ++i) {
    const Policy g = random_policy(rng, 1, 5, 16);
    auto invs = random_phi_invariants(rng, g);
    auto d = diff(g, invs);
    const Policy max = construct_max_policy(host_set(g), invs).policy;
    std::set<Flow> violating(d.violating.begin(), d.violating.end());
    std::set<Flow> missing(d.permitted_missing.begin(), d.permitted_missing.end());
    for (const Flow& f : violating) CHECK_FALSE(missing.contains(f));
    std::size_t reflexive = 0, kept = 0;
    for (const Flow& f : g.flows()) {
      if (f.reflexive()) {
        ++reflexive;
        CHECK_FALSE(violating.contains(f));
        continue;
      }
      const bool in_max = max.has_flow(f);
      CHECK(in_max != violating.contains(f));
      kept += in_max;
    }
    CHECK(kept + violating.size() + reflexive == g.flow_count());
    CHECK(d.reflexive.size() == reflexive);
    for (const Flow& f : missing) {
      CHECK(max.has_flow(f));
      CHECK_FALSE(g.has_flow(f));
      CHECK_FALSE(f.reflexive());
    }
    // The policy without its violating flows satisfies every invariant.
    CHECK(compose(invs, g.without(d.violating)) == true);
  }
}
