#include "polverif/templates/security_gateway.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace polverif::templates {

namespace {
constexpr std::array<std::string_view, 4> kRoleNames = {"sgw", "sgwa", "memb", "default"};
}

std::string_view to_string(SgwRole r) { return kRoleNames[static_cast<std::size_t>(r)]; }

std::optional<SgwRole> parse_sgw_role(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (std::size_t i = 0; i < kRoleNames.size(); ++i)
    if (lower == kRoleNames[i]) return static_cast<SgwRole>(i);
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, SgwRole r) { return os << to_string(r); }

std::vector<SgwRole> all_sgw_roles() {
  return {SgwRole::sgw, SgwRole::sgwa, SgwRole::memb, SgwRole::default_role};
}

bool sgw_table(SgwRole snd, SgwRole rcv) {
  switch (snd) {
    case SgwRole::sgw:
    case SgwRole::sgwa:
      return true;
    case SgwRole::memb:
      return rcv != SgwRole::memb;
    case SgwRole::default_role:
      return rcv == SgwRole::sgwa || rcv == SgwRole::default_role;
  }
  return false;
}

Template<SgwRole> security_gateway() {
  Template<SgwRole> t;
  t.name = "Security Gateway";
  t.strategy = Strategy::access_control;
  t.default_attr = SgwRole::default_role;
  t.eval = [](const Policy& g, const HostMapping<SgwRole>& nP) {
    for (const Flow& f : g.flows()) {
      if (f.src == f.dst) continue;
      if (!sgw_table(nP(f.src), nP(f.dst))) return false;
    }
    return true;
  };
  t.phi = PhiStructure<SgwRole>{sgw_table, true};
  return t;
}

}  // namespace polverif::templates
