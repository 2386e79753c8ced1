#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "polverif/invariant.hpp"

namespace polverif::templates {

// Position in an organisational hierarchy, written as a fully qualified
// name such as "wh.e.cc" (wheels, under engineering, under cc).
//
// Besides proper names there are two distinguished elements: Unassigned,
// below everything, and Top, above everything. Top only arises from chop();
// it cannot be parsed or assigned to a host.
class DomainName {
 public:
  enum class Kind { unassigned, name, top };

  static DomainName unassigned() { return DomainName(Kind::unassigned, {}); }
  static DomainName top() { return DomainName(Kind::top, {}); }
  // Labels most specific first; throws std::invalid_argument on an empty list
  // or an empty label.
  static DomainName from_labels(std::vector<std::string> labels);
  // "wh.e.cc" -> [wh, e, cc]. Case-sensitive. nullopt if malformed.
  static std::optional<DomainName> parse(std::string_view fqdn);

  Kind kind() const noexcept { return kind_; }
  bool is_unassigned() const noexcept { return kind_ == Kind::unassigned; }
  bool is_top() const noexcept { return kind_ == Kind::top; }
  bool is_name() const noexcept { return kind_ == Kind::name; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::string to_string() const;

  friend auto operator<=>(const DomainName&, const DomainName&) = default;
  friend bool operator==(const DomainName&, const DomainName&) = default;

 private:
  DomainName(Kind k, std::vector<std::string> labels) : kind_(k), labels_(std::move(labels)) {}

  Kind kind_;
  std::vector<std::string> labels_;
};

std::ostream& operator<<(std::ostream& os, const DomainName& d);

// "is below or at the same level as": a name is below every suffix of itself.
bool leq_domain(const DomainName& a, const DomainName& b);

// Drops the n most specific labels. Running out of labels yields Top.
DomainName chop(const DomainName& d, std::size_t n);

// leq_domain(receiver, chop(sender, trust)) without building the chopped name.
bool leq_chopped(const DomainName& receiver, const DomainName& sender, std::size_t trust);

DomainName domain_meet(const DomainName& a, const DomainName& b);
DomainName domain_join(const DomainName& a, const DomainName& b);

struct DomAttr {
  DomainName level = DomainName::unassigned();
  std::size_t trust = 0;

  friend auto operator<=>(const DomAttr&, const DomAttr&) = default;
  friend bool operator==(const DomAttr&, const DomAttr&) = default;
};

std::ostream& operator<<(std::ostream& os, const DomAttr& a);

// Receivers must be at or below the sender's level after the sender's trust
// has lifted it. Access control strategy, default (Unassigned, 0).
Template<DomAttr> domain_hierarchy();

// All names of depth 1..max_depth over the given labels.
std::vector<DomainName> domain_fragment(const std::vector<std::string>& labels,
                                        std::size_t max_depth);

// (Unassigned, 0) followed by every (name, trust) with name from
// domain_fragment and trust in 0..max_trust.
std::vector<DomAttr> dom_attr_fragment(const std::vector<std::string>& labels,
                                       std::size_t max_depth, std::size_t max_trust);

}  // namespace polverif::templates
