#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polverif/policy.hpp"

namespace polverif {

// Hosts h0..h{n-1}.
inline std::set<HostId> numbered_hosts(std::size_t n, const std::string& prefix = "h") {
  std::set<HostId> out;
  for (std::size_t i = 0; i < n; ++i) out.insert(HostId(prefix + std::to_string(i)));
  return out;
}

// A policy with between min_hosts and max_hosts numbered hosts and a
// uniformly chosen number (up to max_flows) of distinct flows, in-host flows
// included.
inline Policy random_policy(std::mt19937_64& rng, std::size_t min_hosts, std::size_t max_hosts,
                            std::size_t max_flows) {
  std::uniform_int_distribution<std::size_t> nh(min_hosts, max_hosts);
  const std::set<HostId> hosts = numbered_hosts(nh(rng));
  std::vector<Flow> pairs = allow_all(hosts).flows();
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::uniform_int_distribution<std::size_t> ne(0, std::min(max_flows, pairs.size()));
  pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(ne(rng)), pairs.end());
  return make_policy(hosts, std::set<Flow>(pairs.begin(), pairs.end()));
}

// Each host is configured with probability `density`, with a uniformly
// chosen member of `universe`.
template <class Psi>
AttributeConfig<Psi> random_config(std::mt19937_64& rng, const std::vector<HostId>& hosts,
                                   const std::vector<Psi>& universe, double density = 0.7) {
  AttributeConfig<Psi> out;
  if (universe.empty()) return out;
  std::bernoulli_distribution configured(density);
  std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
  for (const HostId& h : hosts)
    if (configured(rng)) out.insert(h, universe[pick(rng)]);
  return out;
}

}  // namespace polverif
