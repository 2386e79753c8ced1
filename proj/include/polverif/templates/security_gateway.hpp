#pragma once

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "polverif/invariant.hpp"

namespace polverif::templates {

// sgw: security gateway; sgwa: gateway reachable from outside; memb: domain
// member; default_role: none of these.
enum class SgwRole { sgw, sgwa, memb, default_role };

std::string_view to_string(SgwRole r);
// Case-insensitive; "default" names default_role.
std::optional<SgwRole> parse_sgw_role(std::string_view text);
std::ostream& operator<<(std::ostream& os, SgwRole r);

std::vector<SgwRole> all_sgw_roles();

// The access table: may a host with role `snd` contact one with role `rcv`?
bool sgw_table(SgwRole snd, SgwRole rcv);

// Members talk to each other only through a gateway and are unreachable from
// outside. In-host flows are exempt. Access control strategy, default
// default_role.
Template<SgwRole> security_gateway();

}  // namespace polverif::templates
