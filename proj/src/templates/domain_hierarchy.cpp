#include "polverif/templates/domain_hierarchy.hpp"

#include <algorithm>
#include <stdexcept>

namespace polverif::templates {

namespace {

// Does `whole` end with whole-suffix `tail[from..]`?
bool ends_with(const std::vector<std::string>& whole, const std::vector<std::string>& tail,
               std::size_t from) {
  const std::size_t n = tail.size() - from;
  if (n > whole.size()) return false;
  return std::equal(tail.begin() + static_cast<std::ptrdiff_t>(from), tail.end(),
                    whole.end() - static_cast<std::ptrdiff_t>(n));
}

}  // namespace

DomainName DomainName::from_labels(std::vector<std::string> labels) {
  if (labels.empty()) throw std::invalid_argument("domain name needs at least one label");
  for (const auto& l : labels)
    if (l.empty()) throw std::invalid_argument("domain name labels must not be empty");
  return DomainName(Kind::name, std::move(labels));
}

std::optional<DomainName> DomainName::parse(std::string_view fqdn) {
  std::vector<std::string> labels;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = fqdn.find('.', start);
    std::string_view label = fqdn.substr(start, dot == std::string_view::npos ? dot : dot - start);
    if (label.empty()) return std::nullopt;
    if (std::any_of(label.begin(), label.end(),
                    [](unsigned char c) { return c <= ' ' || c == 0x7f; }))
      return std::nullopt;
    labels.emplace_back(label);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return DomainName(Kind::name, std::move(labels));
}

std::string DomainName::to_string() const {
  switch (kind_) {
    case Kind::unassigned: return "<unassigned>";
    case Kind::top: return "<top>";
    case Kind::name: break;
  }
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += '.';
    out += labels_[i];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DomainName& d) { return os << d.to_string(); }

bool leq_domain(const DomainName& a, const DomainName& b) {
  if (a.is_unassigned() || b.is_top()) return true;
  if (a.is_top() || b.is_unassigned()) return false;
  return ends_with(a.labels(), b.labels(), 0);
}

DomainName chop(const DomainName& d, std::size_t n) {
  if (!d.is_name() || n == 0) return d;
  if (n >= d.labels().size()) return DomainName::top();
  return DomainName::from_labels(
      {d.labels().begin() + static_cast<std::ptrdiff_t>(n), d.labels().end()});
}

bool leq_chopped(const DomainName& receiver, const DomainName& sender, std::size_t trust) {
  if (receiver.is_unassigned()) return true;
  if (sender.is_top()) return true;
  if (sender.is_unassigned()) return false;
  if (trust >= sender.labels().size()) return true;
  if (receiver.is_top()) return false;
  return ends_with(receiver.labels(), sender.labels(), trust);
}

DomainName domain_meet(const DomainName& a, const DomainName& b) {
  if (leq_domain(a, b)) return a;
  if (leq_domain(b, a)) return b;
  // Incomparable names share no common descendant name.
  return DomainName::unassigned();
}

DomainName domain_join(const DomainName& a, const DomainName& b) {
  if (leq_domain(a, b)) return b;
  if (leq_domain(b, a)) return a;
  const auto& x = a.labels();
  const auto& y = b.labels();
  std::size_t common = 0;
  while (common < x.size() && common < y.size() &&
         x[x.size() - 1 - common] == y[y.size() - 1 - common])
    ++common;
  if (common == 0) return DomainName::top();
  return DomainName::from_labels({x.end() - static_cast<std::ptrdiff_t>(common), x.end()});
}

std::ostream& operator<<(std::ostream& os, const DomAttr& a) {
  return os << '(' << a.level << ", trust " << a.trust << ')';
}

Template<DomAttr> domain_hierarchy() {
  Template<DomAttr> t;
  t.name = "Domain Hierarchy";
  t.strategy = Strategy::access_control;
  t.default_attr = DomAttr{DomainName::unassigned(), 0};
  t.eval = [](const Policy& g, const HostMapping<DomAttr>& nP) {
    for (const Flow& f : g.flows()) {
      const DomAttr& s = nP(f.src);
      if (!leq_domain(nP(f.dst).level, chop(s.level, s.trust))) return false;
    }
    return true;
  };
  t.phi = PhiStructure<DomAttr>{
      [](const DomAttr& s, const DomAttr& r) { return leq_chopped(r.level, s.level, s.trust); },
      false};
  return t;
}

std::vector<DomainName> domain_fragment(const std::vector<std::string>& labels,
                                        std::size_t max_depth) {
  std::vector<DomainName> out;
  std::vector<std::vector<std::string>> layer{{}};
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    std::vector<std::vector<std::string>> next;
    for (const auto& suffix : layer) {
      for (const auto& l : labels) {
        std::vector<std::string> name{l};
        name.insert(name.end(), suffix.begin(), suffix.end());
        out.push_back(DomainName::from_labels(name));
        next.push_back(std::move(name));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<DomAttr> dom_attr_fragment(const std::vector<std::string>& labels,
                                       std::size_t max_depth, std::size_t max_trust) {
  std::vector<DomAttr> out{DomAttr{DomainName::unassigned(), 0}};
  for (const DomainName& d : domain_fragment(labels, max_depth))
    for (std::size_t t = 0; t <= max_trust; ++t) out.push_back(DomAttr{d, t});
  return out;
}

}  // namespace polverif::templates
