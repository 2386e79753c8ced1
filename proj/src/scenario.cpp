#include "polverif/scenario.hpp"

#include <set>

namespace polverif {

ScenarioError::ScenarioError(Kind kind, std::string subject, std::string location,
                             const std::string& detail)
    : std::runtime_error(location.empty() ? detail : location + ": " + detail),
      kind_(kind),
      subject_(std::move(subject)),
      location_(std::move(location)) {}

std::string_view to_string(ScenarioError::Kind k) {
  using K = ScenarioError::Kind;
  switch (k) {
    case K::io: return "IoError";
    case K::syntax: return "SyntaxError";
    case K::schema: return "SchemaError";
    case K::unknown_template: return "UnknownTemplate";
    case K::unknown_host: return "UnknownHost";
    case K::bad_attribute: return "BadAttribute";
    case K::invariant_rejected: return "InvariantRejected";
  }
  return "ScenarioError";
}

Scenario make_scenario(Policy policy, std::vector<AnyInvariant> invariants) {
  const std::set<HostId> hosts = host_set(policy);
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    const AnyInvariant& inv = invariants[i];
    const std::string where = "/invariants/" + std::to_string(i);
    for (const HostId& h : inv.configured_hosts())
      if (!hosts.contains(h))
        throw ScenarioError(ScenarioError::Kind::unknown_host, h.name(), where,
                            "unknown host '" + h.name() + "' in attributes of " + inv.name());
    if (!inv.deny_all_valid(hosts))
      throw ScenarioError(ScenarioError::Kind::invariant_rejected, inv.name(), where,
                          "invariant '" + inv.name() + "' rejected: deny-all validity failed");
  }
  return Scenario{std::move(policy), std::move(invariants)};
}

}  // namespace polverif
