#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "polverif/engine.hpp"
#include "polverif/io/registry.hpp"

namespace polverif::io {

inline constexpr std::size_t kDefaultDisplayLimit = 50;

// Human readable. Offending flows are listed up to `display_limit` flows per
// invariant, with a count of the rest.
std::string render_report_text(const VerificationReport& report,
                               std::size_t display_limit = kDefaultDisplayLimit);
// Machine readable, never truncated.
Json report_to_json(const VerificationReport& report);

std::string render_policy_text(const Policy& policy, bool maximal);
Json policy_to_json(const Policy& policy);

std::string render_diff_text(const PolicyDiff& d);
Json diff_to_json(const PolicyDiff& d);

// Graphviz digraph. Policy flows are solid, violating ones additionally red,
// permitted-but-missing flows dashed. In-host flows are left out. Nodes and
// edges appear in lexicographic order.
std::string export_dot(const Policy& policy, const std::optional<PolicyDiff>& diff = std::nullopt);

}  // namespace polverif::io
