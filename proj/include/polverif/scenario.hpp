#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polverif/invariant.hpp"
#include "polverif/policy.hpp"

namespace polverif {

// Anything wrong with a scenario, from a malformed document to an invariant
// that cannot be admitted. `location` is a line/column or a document path
// when known.
class ScenarioError : public std::runtime_error {
 public:
  enum class Kind {
    io,
    syntax,
    schema,
    unknown_template,
    unknown_host,
    bad_attribute,
    invariant_rejected,
  };

  ScenarioError(Kind kind, std::string subject, std::string location, const std::string& detail);

  Kind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }
  const std::string& location() const noexcept { return location_; }

 private:
  Kind kind_;
  std::string subject_;
  std::string location_;
};

std::string_view to_string(ScenarioError::Kind k);

// A policy plus the invariants it is checked against.
struct Scenario {
  Policy policy;
  std::vector<AnyInvariant> invariants;
};

// Validates and assembles a scenario: every configured host must be a host
// of the policy, and every invariant must hold on the deny-all policy.
Scenario make_scenario(Policy policy, std::vector<AnyInvariant> invariants);

}  // namespace polverif
