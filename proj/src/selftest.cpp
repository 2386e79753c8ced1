#include "polverif/selftest.hpp"

#include <charconv>
#include <cstdlib>
#include <random>
#include <string>
#include <string_view>

#include "polverif/engine.hpp"
#include "polverif/properties.hpp"
#include "polverif/sampling.hpp"
#include "polverif/templates.hpp"

namespace polverif {

namespace t = polverif::templates;

std::uint64_t selftest_seed_from_env() {
  const char* env = std::getenv("POLICY_VERIF_SEED");
  if (!env) return SelftestOptions{}.seed;
  std::string_view s(env);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return SelftestOptions{}.seed;
  return v;
}

namespace {

template <class Psi>
bool check_template(const Template<Psi>& tmpl, const std::vector<Psi>& universe,
                    std::mt19937_64& rng, std::size_t rounds, std::ostream& out) {
  std::size_t mismatches = 0, unrepaired = 0, deny_all_failures = 0, non_monotone = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    const Policy g = random_policy(rng, 1, 4, 7);
    InvariantInstance<Psi> inst{tmpl, random_config(rng, g.hosts(), universe, 0.8), ""};
    const auto nP = inst.mapping();
    const auto fast = offending_flows(tmpl, g, nP);
    const auto brute = offending_flows_bruteforce(tmpl, g, nP);
    if (fast != brute) ++mismatches;
    for (const OffendingFlowSet& f : brute)
      if (!tmpl.eval(g.without(f.flows), nP)) ++unrepaired;
    if (!check_deny_all_validity(inst, host_set(g))) ++deny_all_failures;
    const Policy base = fast.empty() ? g : g.without(fast.front().flows);
    if (!check_monotonicity(inst, base, 16, rng())) ++non_monotone;
  }
  const bool ok = mismatches + unrepaired + deny_all_failures + non_monotone == 0;
  out << (ok ? "PASS " : "FAIL ") << tmpl.name << ": " << rounds << " random policies";
  if (!ok)
    out << " (fast/brute mismatches " << mismatches << ", unrepaired " << unrepaired
        << ", deny-all failures " << deny_all_failures << ", monotonicity failures "
        << non_monotone << ")";
  out << '\n';
  return ok;
}

bool check_construction(std::mt19937_64& rng, std::size_t rounds, std::ostream& out) {
  std::size_t unsound = 0;
  const auto dom_universe = t::dom_attr_fragment({"a", "b"}, 2, 1);
  for (std::size_t i = 0; i < rounds; ++i) {
    const auto hosts = numbered_hosts(std::uniform_int_distribution<std::size_t>(1, 6)(rng));
    const std::vector<HostId> hv(hosts.begin(), hosts.end());
    std::vector<AnyInvariant> invs;
    invs.emplace_back(InvariantInstance<t::Clearance>{
        t::blp_basic(), random_config(rng, hv, t::all_clearances(), 0.5), ""});
    invs.emplace_back(InvariantInstance<t::BlpTrustAttr>{
        t::blp_trust(), random_config(rng, hv, t::all_blp_trust_attrs(), 0.5), ""});
    invs.emplace_back(InvariantInstance<t::DomAttr>{
        t::domain_hierarchy(), random_config(rng, hv, dom_universe, 0.5), ""});
    invs.emplace_back(InvariantInstance<t::SgwRole>{
        t::security_gateway(), random_config(rng, hv, t::all_sgw_roles(), 0.5), ""});
    std::shuffle(invs.begin(), invs.end(), rng);
    const auto built = construct_max_policy(hosts, invs);
    if (!compose(invs, built.policy)) ++unsound;
  }
  const bool ok = unsound == 0;
  out << (ok ? "PASS " : "FAIL ") << "policy construction soundness: " << rounds << " scenarios";
  if (!ok) out << " (" << unsound << " unsound)";
  out << '\n';
  return ok;
}

}  // namespace

bool run_selftest(const SelftestOptions& options, std::ostream& out) {
  std::mt19937_64 rng(options.seed);
  out << "selftest seed " << options.seed << '\n';
  bool ok = true;
  ok &= check_template(t::blp_basic(), t::all_clearances(), rng, options.policies, out);
  ok &= check_template(t::blp_trust(), t::all_blp_trust_attrs(), rng, options.policies, out);
  ok &= check_template(t::domain_hierarchy(), t::dom_attr_fragment({"a", "b"}, 3, 2), rng,
                       options.policies, out);
  ok &= check_template(t::security_gateway(), t::all_sgw_roles(), rng, options.policies, out);
  ok &= check_construction(rng, options.policies / 4 + 1, out);
  out << (ok ? "selftest passed\n" : "selftest FAILED\n");
  return ok;
}

}  // namespace polverif
