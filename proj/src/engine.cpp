#include "polverif/engine.hpp"

#include <algorithm>
#include <future>
#include <iterator>

namespace polverif {

namespace {

InvariantResult check_one(const AnyInvariant& inv, const Policy& g, std::size_t edge_bound) {
  InvariantResult r;
  r.name = inv.name();
  r.template_name = inv.template_name();
  r.strategy = inv.strategy();
  r.phi_structured = inv.phi_structured();
  r.holds = inv.eval(g);
  if (!r.holds) {
    r.offending = inv.offending_flows(g, edge_bound);
    for (const OffendingFlowSet& f : r.offending) {
      auto o = inv.offenders(f);
      r.offender_hosts.insert(o.begin(), o.end());
    }
  }
  return r;
}

}  // namespace

VerificationReport verify(const Scenario& s, const VerifyOptions& options) {
  VerificationReport report;
  if (options.parallel && s.invariants.size() > 1) {
    std::vector<std::future<InvariantResult>> pending;
    pending.reserve(s.invariants.size());
    for (const AnyInvariant& inv : s.invariants)
      pending.push_back(std::async(std::launch::async, check_one, std::cref(inv),
                                   std::cref(s.policy), options.edge_bound));
    for (auto& f : pending) report.invariants.push_back(f.get());
  } else {
    for (const AnyInvariant& inv : s.invariants)
      report.invariants.push_back(check_one(inv, s.policy, options.edge_bound));
  }
  report.overall = std::all_of(report.invariants.begin(), report.invariants.end(),
                               [](const InvariantResult& r) { return r.holds; });
  return report;
}

ConstructionResult construct_max_policy(const std::set<HostId>& hosts,
                                        std::span<const AnyInvariant> invariants,
                                        std::size_t edge_bound) {
  ConstructionResult out;
  out.policy = allow_all(hosts);
  out.maximal = std::all_of(invariants.begin(), invariants.end(),
                            [](const AnyInvariant& i) { return i.phi_structured(); });

  // Monotone invariants are settled in one pass; the outer loop only repeats
  // if removing flows for a later invariant broke an earlier one.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const AnyInvariant& inv : invariants) {
      while (!inv.eval(out.policy)) {
        std::set<Flow> removal;
        for (const OffendingFlowSet& f : inv.offending_flows(out.policy, edge_bound))
          for (const Flow& e : f.flows)
            if (!e.reflexive()) removal.insert(e);
        if (removal.empty())
          throw ConstructionError("invariant '" + inv.name() +
                                  "' cannot be satisfied by removing inter-host flows");
        std::vector<Flow> r(removal.begin(), removal.end());
        out.policy = out.policy.without(r);
        changed = true;
      }
    }
    if (changed && compose(invariants, out.policy)) break;
  }
  return out;
}

PolicyDiff diff(const Policy& user_policy, std::span<const AnyInvariant> invariants,
                std::size_t edge_bound) {
  const ConstructionResult max =
      construct_max_policy(host_set(user_policy), invariants, edge_bound);
  PolicyDiff d;
  d.reference_maximal = max.maximal;
  for (const Flow& f : user_policy.flows()) {
    if (f.reflexive())
      d.reflexive.push_back(f);
    else if (!max.policy.has_flow(f))
      d.violating.push_back(f);
  }
  for (const Flow& f : max.policy.flows())
    if (!f.reflexive() && !user_policy.has_flow(f)) d.permitted_missing.push_back(f);
  return d;
}

PolicyDiff diff(const Scenario& s, std::size_t edge_bound) {
  return diff(s.policy, s.invariants, edge_bound);
}

}  // namespace polverif
