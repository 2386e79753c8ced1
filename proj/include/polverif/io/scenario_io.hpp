#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "polverif/io/registry.hpp"
#include "polverif/scenario.hpp"

namespace polverif::io {

// Scenario documents are JSON:
//
//   {
//     "hosts": ["A", "B"],
//     "flows": [["A", "B"]],
//     "invariants": [
//       {"template": "blp_basic", "name": "optional label",
//        "attributes": {"A": "confidential"}}
//     ]
//   }
//
// Missing sections are empty. Unknown keys, duplicate hosts, flows or
// object keys are rejected. Throws ScenarioError.
Scenario parse_scenario(std::string_view document,
                        const TemplateRegistry& registry = TemplateRegistry::builtin());

Scenario load_scenario_file(const std::filesystem::path& path,
                            const TemplateRegistry& registry = TemplateRegistry::builtin());

Json scenario_to_json(const Scenario& s,
                      const TemplateRegistry& registry = TemplateRegistry::builtin());

// Pretty-printed, deterministic, and accepted by parse_scenario.
std::string serialize_scenario(const Scenario& s,
                               const TemplateRegistry& registry = TemplateRegistry::builtin());

}  // namespace polverif::io
