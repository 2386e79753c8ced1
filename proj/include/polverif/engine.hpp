#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polverif/invariant.hpp"
#include "polverif/scenario.hpp"

namespace polverif {

struct InvariantResult {
  std::string name;
  std::string template_name;
  Strategy strategy = Strategy::access_control;
  bool phi_structured = false;
  bool holds = true;
  std::vector<OffendingFlowSet> offending;
  std::set<HostId> offender_hosts;  // union of offenders over all offending sets
};

struct VerificationReport {
  std::vector<InvariantResult> invariants;  // scenario order
  bool overall = true;
};

struct VerifyOptions {
  std::size_t edge_bound = kDefaultEdgeBound;
  // Evaluate invariants concurrently. The report is identical either way.
  bool parallel = false;
};

// Throws TooLarge when a template without per-flow structure is violated on
// more flows than the edge bound allows to enumerate.
VerificationReport verify(const Scenario& s, const VerifyOptions& options = {});

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConstructionResult {
  Policy policy;
  // Guaranteed maximum: every invariant is phi-structured. Otherwise the
  // result is sound but possibly not maximal.
  bool maximal = true;
};

// Starts from the allow-all policy over `hosts` and, invariant by invariant,
// removes the union of its offending flows until everything holds. In-host
// flows are never removed.
ConstructionResult construct_max_policy(const std::set<HostId>& hosts,
                                        std::span<const AnyInvariant> invariants,
                                        std::size_t edge_bound = kDefaultEdgeBound);

// Policy versus what its invariants permit, ignoring in-host flows.
struct PolicyDiff {
  std::vector<Flow> violating;          // in the policy, not in the maximal policy
  std::vector<Flow> permitted_missing;  // in the maximal policy, not in the policy
  std::vector<Flow> reflexive;          // in-host flows listed by the policy
  bool reference_maximal = true;        // see ConstructionResult::maximal
};

PolicyDiff diff(const Policy& user_policy, std::span<const AnyInvariant> invariants,
                std::size_t edge_bound = kDefaultEdgeBound);
PolicyDiff diff(const Scenario& s, std::size_t edge_bound = kDefaultEdgeBound);

}  // namespace polverif
