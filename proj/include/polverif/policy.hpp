#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polverif {

// Opaque host name. Anything that may appear in a policy: an address, a
// name, a role. Compared textually and case-sensitively.
class HostId {
 public:
  explicit HostId(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const HostId&, const HostId&) = default;
  friend bool operator==(const HostId&, const HostId&) = default;

 private:
  std::string name_;
};

inline std::ostream& operator<<(std::ostream& os, const HostId& h) {
  return os << h.name();
}

// A directed allowed flow (sender, receiver). Ordered by source then target.
struct Flow {
  HostId src;
  HostId dst;

  bool reflexive() const noexcept { return src == dst; }

  friend auto operator<=>(const Flow&, const Flow&) = default;
  friend bool operator==(const Flow&, const Flow&) = default;
};

std::ostream& operator<<(std::ostream& os, const Flow& f);

class DanglingEndpoint : public std::invalid_argument {
 public:
  explicit DanglingEndpoint(Flow flow);
  const Flow& flow() const noexcept { return flow_; }

 private:
  Flow flow_;
};

// A security policy: the directed graph (V, E) of allowed flows.
//
// Hosts and flows are kept sorted and duplicate free; every flow endpoint is
// a host. Instances are immutable. The host list is shared between a policy
// and the policies derived from it by dropping flows, which keeps subset
// enumeration cheap.
class Policy {
 public:
  // The empty graph.
  Policy();

  const std::vector<HostId>& hosts() const noexcept { return *hosts_; }
  const std::vector<Flow>& flows() const noexcept { return flows_; }

  std::size_t host_count() const noexcept { return hosts_->size(); }
  std::size_t flow_count() const noexcept { return flows_.size(); }

  bool has_host(const HostId& h) const;
  bool has_flow(const Flow& f) const;

  // Same hosts, flows restricted to those at the given indices of flows().
  // Indices must be strictly increasing.
  Policy with_flow_indices(std::span<const std::size_t> indices) const;

  // Same hosts, flows = the members of flows() selected by the bit mask.
  // Requires flow_count() < 64.
  Policy with_flow_mask(std::uint64_t mask) const;

  // Same hosts, flows minus every element of `removed`.
  Policy without(std::span<const Flow> removed) const;

  // Same hosts, flows plus `added` (endpoints must be hosts).
  Policy with(std::span<const Flow> added) const;

  friend bool operator==(const Policy& a, const Policy& b);

 private:
  friend Policy make_policy(std::set<HostId>, std::set<Flow>);
  friend Policy allow_all(const std::set<HostId>&);
  friend Policy deny_all(const std::set<HostId>&);

  Policy(std::shared_ptr<const std::vector<HostId>> hosts,
         std::vector<Flow> flows);

  std::shared_ptr<const std::vector<HostId>> hosts_;
  std::vector<Flow> flows_;
};

// Throws DanglingEndpoint if a flow endpoint is not in `hosts`.
Policy make_policy(std::set<HostId> hosts, std::set<Flow> flows);

// (V, V x V), reflexive pairs included.
Policy allow_all(const std::set<HostId>& hosts);

// (V, {}).
Policy deny_all(const std::set<HostId>& hosts);

std::set<HostId> host_set(const Policy& p);

// A user supplied, possibly incomplete host -> attribute map.
template <class Psi>
class AttributeConfig {
 public:
  AttributeConfig() = default;
  AttributeConfig(std::initializer_list<std::pair<const HostId, Psi>> init)
      : entries_(init) {}
  explicit AttributeConfig(std::map<HostId, Psi> entries)
      : entries_(std::move(entries)) {}

  // Returns false (and keeps the old value) if the host is already keyed.
  bool insert(HostId host, Psi attr) {
    return entries_.emplace(std::move(host), std::move(attr)).second;
  }

  void assign(const HostId& host, Psi attr) {
    entries_.insert_or_assign(host, std::move(attr));
  }

  const Psi* find(const HostId& host) const {
    auto it = entries_.find(host);
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool contains(const HostId& host) const { return entries_.contains(host); }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const std::map<HostId, Psi>& entries() const noexcept { return entries_; }

  friend bool operator==(const AttributeConfig&, const AttributeConfig&) = default;

 private:
  std::map<HostId, Psi> entries_;
};

// Total host mapping: configured attribute if present, otherwise the default.
template <class Psi>
class HostMapping {
 public:
  HostMapping(AttributeConfig<Psi> config, Psi default_attr)
      : config_(std::move(config)), default_(std::move(default_attr)) {}

  const Psi& lookup(const HostId& h) const {
    const Psi* p = config_.find(h);
    return p ? *p : default_;
  }
  const Psi& operator()(const HostId& h) const { return lookup(h); }

  // The mapping with `h` sent to `attr` and everything else unchanged.
  HostMapping remapped(const HostId& h, Psi attr) const {
    HostMapping copy = *this;
    copy.config_.assign(h, std::move(attr));
    return copy;
  }

  const AttributeConfig<Psi>& config() const noexcept { return config_; }
  const Psi& default_attr() const noexcept { return default_; }

 private:
  AttributeConfig<Psi> config_;
  Psi default_;
};

template <class Psi>
HostMapping<Psi> total_map(AttributeConfig<Psi> config, Psi default_attr) {
  return HostMapping<Psi>(std::move(config), std::move(default_attr));
}

}  // namespace polverif
