#include "polverif/policy.hpp"

#include <algorithm>
#include <iterator>

namespace polverif {

HostId::HostId(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw std::invalid_argument("host name must not be empty");
}

std::ostream& operator<<(std::ostream& os, const Flow& f) {
  return os << '(' << f.src << ", " << f.dst << ')';
}

namespace {

std::string dangling_message(const Flow& f) {
  return "flow (" + f.src.name() + ", " + f.dst.name() +
         ") has an endpoint that is not a host of the policy";
}

const std::shared_ptr<const std::vector<HostId>>& no_hosts() {
  static const auto empty = std::make_shared<const std::vector<HostId>>();
  return empty;
}

}  // namespace

DanglingEndpoint::DanglingEndpoint(Flow flow)
    : std::invalid_argument(dangling_message(flow)), flow_(std::move(flow)) {}

Policy::Policy() : hosts_(no_hosts()) {}

Policy::Policy(std::shared_ptr<const std::vector<HostId>> hosts,
               std::vector<Flow> flows)
    : hosts_(std::move(hosts)), flows_(std::move(flows)) {}

bool Policy::has_host(const HostId& h) const {
  return std::binary_search(hosts_->begin(), hosts_->end(), h);
}

bool Policy::has_flow(const Flow& f) const {
  return std::binary_search(flows_.begin(), flows_.end(), f);
}

Policy Policy::with_flow_indices(std::span<const std::size_t> indices) const {
  std::vector<Flow> kept;
  kept.reserve(indices.size());
  for (std::size_t i : indices) kept.push_back(flows_.at(i));
  return Policy(hosts_, std::move(kept));
}

Policy Policy::with_flow_mask(std::uint64_t mask) const {
  if (flows_.size() >= 64) throw std::length_error("flow mask needs fewer than 64 flows");
  std::vector<Flow> kept;
  for (std::size_t i = 0; i < flows_.size(); ++i)
    if (mask >> i & 1U) kept.push_back(flows_[i]);
  return Policy(hosts_, std::move(kept));
}

Policy Policy::without(std::span<const Flow> removed) const {
  std::vector<Flow> sorted(removed.begin(), removed.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Flow> kept;
  kept.reserve(flows_.size());
  std::set_difference(flows_.begin(), flows_.end(), sorted.begin(), sorted.end(),
                      std::back_inserter(kept));
  return Policy(hosts_, std::move(kept));
}

Policy Policy::with(std::span<const Flow> added) const {
  for (const Flow& f : added)
    if (!has_host(f.src) || !has_host(f.dst)) throw DanglingEndpoint(f);
  std::vector<Flow> sorted(added.begin(), added.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Flow> merged;
  merged.reserve(flows_.size() + sorted.size());
  std::set_union(flows_.begin(), flows_.end(), sorted.begin(), sorted.end(),
                 std::back_inserter(merged));
  return Policy(hosts_, std::move(merged));
}

bool operator==(const Policy& a, const Policy& b) {
  return a.hosts() == b.hosts() && a.flows_ == b.flows_;
}

Policy make_policy(std::set<HostId> hosts, std::set<Flow> flows) {
  for (const Flow& f : flows)
    if (!hosts.contains(f.src) || !hosts.contains(f.dst)) throw DanglingEndpoint(f);
  auto v = std::make_shared<const std::vector<HostId>>(hosts.begin(), hosts.end());
  return Policy(std::move(v), std::vector<Flow>(flows.begin(), flows.end()));
}

Policy allow_all(const std::set<HostId>& hosts) {
  std::vector<Flow> flows;
  flows.reserve(hosts.size() * hosts.size());
  for (const HostId& s : hosts)
    for (const HostId& r : hosts) flows.push_back(Flow{s, r});
  auto v = std::make_shared<const std::vector<HostId>>(hosts.begin(), hosts.end());
  return Policy(std::move(v), std::move(flows));
}

Policy deny_all(const std::set<HostId>& hosts) {
  auto v = std::make_shared<const std::vector<HostId>>(hosts.begin(), hosts.end());
  return Policy(std::move(v), {});
}

std::set<HostId> host_set(const Policy& p) {
  return {p.hosts().begin(), p.hosts().end()};
}

}  // namespace polverif
