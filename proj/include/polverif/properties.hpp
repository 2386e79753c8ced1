#pragma once

// Bounded checkers for the semantic obligations every template must meet:
// monotonicity, and secure / unique default attributes. They quantify over
// small finite universes, so a `true` is evidence for the bounded fragment
// and a `false` comes with a concrete counterexample.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "polverif/invariant.hpp"

namespace polverif {

struct MonotonicityResult {
  bool holds = true;
  std::size_t trials_checked = 0;
  std::optional<Policy> counterexample;  // a subset policy on which eval fails

  explicit operator bool() const noexcept { return holds; }
};

// Samples `trials` random flow subsets of g (each flow kept with probability
// 1/2). Vacuously true when the invariant does not hold on g itself.
template <class Psi>
MonotonicityResult check_monotonicity(const InvariantInstance<Psi>& inst, const Policy& g,
                                      std::size_t trials, std::uint64_t seed) {
  MonotonicityResult out;
  const auto nP = inst.mapping();
  if (trials == 0 || !inst.tmpl.eval(g, nP)) return out;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(0.5);
  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < trials; ++t) {
    kept.clear();
    for (std::size_t i = 0; i < g.flow_count(); ++i)
      if (keep(rng)) kept.push_back(i);
    Policy sub = g.with_flow_indices(kept);
    ++out.trials_checked;
    if (!inst.tmpl.eval(sub, nP)) {
      out.holds = false;
      out.counterexample = std::move(sub);
      return out;
    }
  }
  return out;
}

template <class Psi>
struct SecureDefaultCounterexample {
  Policy policy;
  AttributeConfig<Psi> mapping;
  OffendingFlowSet offending;
  HostId offender;
};

template <class Psi>
struct SecureDefaultResult {
  bool secure = true;
  std::size_t violated_cases = 0;  // (policy, mapping) pairs that were inspected
  std::optional<SecureDefaultCounterexample<Psi>> counterexample;

  explicit operator bool() const noexcept { return secure; }
};

namespace detail {

// Every flow set over `hosts` with at most `max_edges` flows, smallest
// first, lexicographic within a size.
inline std::vector<Policy> bounded_policies(const std::vector<HostId>& hosts,
                                            std::size_t max_edges) {
  std::set<HostId> v(hosts.begin(), hosts.end());
  const Policy all = allow_all(v);
  const std::size_t m = all.flow_count();
  std::vector<Policy> out;
  for (std::size_t k = 0; k <= std::min(max_edges, m); ++k) {
    detail::for_each_combination(m, k, [&](std::uint64_t mask) {
      out.push_back(all.with_flow_mask(mask));
      return true;
    });
  }
  return out;
}

// Calls visit(config) for every total assignment hosts -> universe, stopping
// early when visit returns false.
template <class Psi, class Visit>
bool for_each_assignment(const std::vector<HostId>& hosts, const std::vector<Psi>& universe,
                         Visit&& visit) {
  if (universe.empty()) return true;
  std::vector<std::size_t> digit(hosts.size(), 0);
  while (true) {
    AttributeConfig<Psi> config;
    for (std::size_t i = 0; i < hosts.size(); ++i) config.insert(hosts[i], universe[digit[i]]);
    if (!visit(config)) return false;
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == universe.size()) digit[i++] = 0;
    if (i == digit.size()) return true;
  }
}

}  // namespace detail

// Is `candidate` a secure default attribute for `tmpl`? For every policy on
// `hosts` with at most `max_edges` flows, every assignment of `universe`
// attributes to the hosts that violates the invariant, every set of
// offending flows F and every offender v of F: the invariant must still be
// violated once v is remapped to `candidate`.
template <class Psi>
SecureDefaultResult<Psi> check_secure_default(const Template<Psi>& tmpl,
                                              const std::vector<HostId>& hosts,
                                              const std::vector<Psi>& universe,
                                              std::size_t max_edges, const Psi& candidate) {
  SecureDefaultResult<Psi> out;
  for (const Policy& g : detail::bounded_policies(hosts, max_edges)) {
    bool found = !detail::for_each_assignment(hosts, universe, [&](const AttributeConfig<Psi>& c) {
      const HostMapping<Psi> nP(c, tmpl.default_attr);
      if (tmpl.eval(g, nP)) return true;
      ++out.violated_cases;
      for (const OffendingFlowSet& f : offending_flows_bruteforce(tmpl, g, nP, g.flow_count())) {
        for (const HostId& v : offenders(tmpl.strategy, f)) {
          if (tmpl.eval(g, nP.remapped(v, candidate))) {
            out.secure = false;
            out.counterexample = SecureDefaultCounterexample<Psi>{g, c, f, v};
            return false;
          }
        }
      }
      return true;
    });
    if (found) break;
  }
  return out;
}

template <class Psi>
SecureDefaultResult<Psi> check_secure_default(const Template<Psi>& tmpl,
                                              const std::vector<HostId>& hosts,
                                              const std::vector<Psi>& universe,
                                              std::size_t max_edges = 4) {
  return check_secure_default(tmpl, hosts, universe, max_edges, tmpl.default_attr);
}

template <class Psi>
struct UniqueDefaultResult {
  bool unique = false;
  bool default_secure = false;
  std::vector<Psi> secure_alternatives;  // candidates other than the default that passed

  explicit operator bool() const noexcept { return unique; }
};

// The template's default is secure and no other member of `universe` is.
// Throws std::invalid_argument if the default is not in `universe`.
template <class Psi>
UniqueDefaultResult<Psi> check_unique_default(const Template<Psi>& tmpl,
                                              const std::vector<HostId>& hosts,
                                              const std::vector<Psi>& universe,
                                              std::size_t max_edges = 4) {
  if (std::find(universe.begin(), universe.end(), tmpl.default_attr) == universe.end())
    throw std::invalid_argument("default attribute of " + tmpl.name + " is not in the universe");
  UniqueDefaultResult<Psi> out;
  out.default_secure = static_cast<bool>(check_secure_default(tmpl, hosts, universe, max_edges));
  for (const Psi& alt : universe) {
    if (alt == tmpl.default_attr) continue;
    if (check_secure_default(tmpl, hosts, universe, max_edges, alt))
      out.secure_alternatives.push_back(alt);
  }
  out.unique = out.default_secure && out.secure_alternatives.empty();
  return out;
}

}  // namespace polverif
