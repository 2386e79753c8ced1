#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "polverif/invariant.hpp"

namespace polverif::templates {

// Security clearances, totally ordered by declaration order.
enum class Clearance { unclassified, confidential, secret, topsecret };

std::string_view to_string(Clearance c);
// Case-insensitive.
std::optional<Clearance> parse_clearance(std::string_view text);
std::ostream& operator<<(std::ostream& os, Clearance c);

std::vector<Clearance> all_clearances();

struct BlpTrustAttr {
  Clearance sc = Clearance::unclassified;
  bool trusted = false;

  friend auto operator<=>(const BlpTrustAttr&, const BlpTrustAttr&) = default;
  friend bool operator==(const BlpTrustAttr&, const BlpTrustAttr&) = default;
};

std::ostream& operator<<(std::ostream& os, const BlpTrustAttr& a);

// All eight (clearance, trust) combinations.
std::vector<BlpTrustAttr> all_blp_trust_attrs();

// No flow from a higher to a lower clearance. Information flow strategy,
// default unclassified.
Template<Clearance> blp_basic();

// As blp_basic, except trusted receivers accept anything (and may pass it on
// under their own clearance). Default (unclassified, untrusted).
Template<BlpTrustAttr> blp_trust();

}  // namespace polverif::templates
