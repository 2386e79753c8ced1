#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polverif/policy.hpp"

namespace polverif {

// Access control strategies blame the sender of an offending flow,
// information flow strategies blame the receiver.
enum class Strategy { access_control, information_flow };

std::string_view to_string(Strategy s);
std::ostream& operator<<(std::ostream& os, Strategy s);

// Per-flow predicate of a template whose semantics is
//   eval((V, E), nP) == for all (s, r) in E [s != r]: allows(nP(s), nP(r)).
template <class Psi>
struct PhiStructure {
  std::function<bool(const Psi& sender, const Psi& receiver)> allows;
  bool exempt_reflexive = false;

  bool applies_to(const Flow& f) const { return !(exempt_reflexive && f.reflexive()); }
};

// Formal semantics of a security invariant, independent of any scenario.
//
// `eval` must be pure, monotone in the flow set, and hold on every deny-all
// policy. When `phi` is present, `eval` must agree with its expansion; the
// offending-flow computation relies on that and takes the linear path.
template <class Psi>
struct Template {
  using attribute_type = Psi;

  std::string name;
  Strategy strategy = Strategy::access_control;
  Psi default_attr{};
  std::function<bool(const Policy&, const HostMapping<Psi>&)> eval;
  std::optional<PhiStructure<Psi>> phi;

  bool phi_structured() const noexcept { return phi.has_value(); }
};

// A template together with the user's partial host configuration.
template <class Psi>
struct InvariantInstance {
  Template<Psi> tmpl;
  AttributeConfig<Psi> config;
  std::string label;  // optional, shown instead of the template name

  HostMapping<Psi> mapping() const { return total_map(config, tmpl.default_attr); }
  const std::string& display_name() const { return label.empty() ? tmpl.name : label; }
};

// One minimal set of flows whose removal repairs a violation. Flows are
// sorted. Sets order by size first, then lexicographically.
struct OffendingFlowSet {
  std::vector<Flow> flows;

  bool empty() const noexcept { return flows.empty(); }
  std::size_t size() const noexcept { return flows.size(); }

  friend bool operator==(const OffendingFlowSet&, const OffendingFlowSet&) = default;
  friend bool operator<(const OffendingFlowSet& a, const OffendingFlowSet& b) {
    if (a.flows.size() != b.flows.size()) return a.flows.size() < b.flows.size();
    return a.flows < b.flows;
  }
};

std::ostream& operator<<(std::ostream& os, const OffendingFlowSet& f);

inline constexpr std::size_t kDefaultEdgeBound = 16;
// Subset enumeration keeps a 2^|E| table; beyond this it is not attempted.
inline constexpr std::size_t kMaxEdgeBound = 24;

class TooLarge : public std::runtime_error {
 public:
  TooLarge(std::size_t edges, std::size_t bound);
  std::size_t edges() const noexcept { return edges_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t edges_;
  std::size_t bound_;
};

template <class Psi>
bool phi_expansion_holds(const PhiStructure<Psi>& phi, const Policy& g,
                         const HostMapping<Psi>& nP) {
  for (const Flow& f : g.flows())
    if (phi.applies_to(f) && !phi.allows(nP(f.src), nP(f.dst))) return false;
  return true;
}

template <class Psi>
bool eval_instance(const InvariantInstance<Psi>& inst, const Policy& g) {
  return inst.tmpl.eval(g, inst.mapping());
}

namespace detail {

// Calls visit(mask) for every k-subset of {0..m-1}, in lexicographic order of
// the ascending index sequence. Stops early if visit returns false.
template <class Visit>
bool for_each_combination(std::size_t m, std::size_t k, Visit&& visit) {
  if (k > m) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t i : idx) mask |= std::uint64_t{1} << i;
    if (!visit(mask)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline OffendingFlowSet flows_of_mask(const Policy& g, std::uint64_t mask) {
  OffendingFlowSet out;
  for (std::size_t i = 0; i < g.flow_count(); ++i)
    if (mask >> i & 1U) out.flows.push_back(g.flows()[i]);
  return out;
}

}  // namespace detail

// Every F subset of E that is a set of offending flows, found by subset
// enumeration: the invariant is violated, holds on (V, E \ F), and adding any
// single flow of F back violates it again. Sorted by size, then lexicographic.
//
// Costs 2^|E| evaluations; throws TooLarge when |E| exceeds `edge_bound`.
template <class Psi>
std::vector<OffendingFlowSet> offending_flows_bruteforce(
    const Template<Psi>& tmpl, const Policy& g, const HostMapping<Psi>& nP,
    std::size_t edge_bound = kDefaultEdgeBound) {
  const std::size_t m = g.flow_count();
  const std::size_t bound = std::min(edge_bound, kMaxEdgeBound);
  if (m > bound) throw TooLarge(m, bound);
  if (tmpl.eval(g, nP)) return {};

  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  // holds[mask]: the invariant holds on the flows selected by mask.
  std::vector<char> holds(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask <= full; ++mask)
    holds[mask] = tmpl.eval(g.with_flow_mask(mask), nP) ? 1 : 0;

  std::vector<OffendingFlowSet> result;
  for (std::size_t k = 1; k <= m; ++k) {
    detail::for_each_combination(m, k, [&](std::uint64_t f) {
      const std::uint64_t rest = full & ~f;
      if (!holds[rest]) return true;
      for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if ((f & bit) && holds[rest | bit]) return true;
      }
      result.push_back(detail::flows_of_mask(g, f));
      return true;
    });
  }
  return result;
}

template <class Psi>
std::vector<OffendingFlowSet> offending_flows_bruteforce(
    const InvariantInstance<Psi>& inst, const Policy& g,
    std::size_t edge_bound = kDefaultEdgeBound) {
  return offending_flows_bruteforce(inst.tmpl, g, inst.mapping(), edge_bound);
}

// The set of offending flows. Phi-structured templates have exactly one
// element when violated, the flows rejected by the per-flow predicate, and
// it is computed in one pass. Other templates fall back to enumeration.
template <class Psi>
std::vector<OffendingFlowSet> offending_flows(const Template<Psi>& tmpl,
                                              const Policy& g,
                                              const HostMapping<Psi>& nP,
                                              std::size_t edge_bound = kDefaultEdgeBound) {
  if (!tmpl.phi) return offending_flows_bruteforce(tmpl, g, nP, edge_bound);
  if (tmpl.eval(g, nP)) return {};
  OffendingFlowSet f;
  for (const Flow& e : g.flows())
    if (tmpl.phi->applies_to(e) && !tmpl.phi->allows(nP(e.src), nP(e.dst)))
      f.flows.push_back(e);
  return {std::move(f)};
}

template <class Psi>
std::vector<OffendingFlowSet> offending_flows(const InvariantInstance<Psi>& inst,
                                              const Policy& g,
                                              std::size_t edge_bound = kDefaultEdgeBound) {
  return offending_flows(inst.tmpl, g, inst.mapping(), edge_bound);
}

// Senders of F for access control, receivers for information flow.
std::set<HostId> offenders(Strategy strategy, const OffendingFlowSet& f);

template <class Psi>
std::set<HostId> offenders(const InvariantInstance<Psi>& inst, const OffendingFlowSet& f) {
  return offenders(inst.tmpl.strategy, f);
}

// Violations are repairable by dropping flows iff the invariant holds on the
// deny-all policy; scenarios only admit invariants passing this.
template <class Psi>
bool check_deny_all_validity(const InvariantInstance<Psi>& inst,
                             const std::set<HostId>& hosts) {
  return eval_instance(inst, deny_all(hosts));
}

// Type-erased invariant instance, so instances over different attribute
// types can live in one scenario.
class AnyInvariant {
 public:
  template <class Psi>
  explicit AnyInvariant(InvariantInstance<Psi> inst)
      : self_(std::make_shared<const Model<Psi>>(std::move(inst))) {}

  const std::string& name() const { return self_->name(); }
  const std::string& template_name() const { return self_->template_name(); }
  const std::string& label() const { return self_->label(); }
  Strategy strategy() const { return self_->strategy(); }
  bool phi_structured() const { return self_->phi_structured(); }

  bool eval(const Policy& g) const { return self_->eval(g); }
  std::vector<OffendingFlowSet> offending_flows(const Policy& g,
                                                std::size_t edge_bound = kDefaultEdgeBound) const {
    return self_->offending_flows(g, edge_bound);
  }
  std::set<HostId> offenders(const OffendingFlowSet& f) const {
    return polverif::offenders(strategy(), f);
  }
  bool deny_all_valid(const std::set<HostId>& hosts) const { return self_->eval(deny_all(hosts)); }
  std::vector<HostId> configured_hosts() const { return self_->configured_hosts(); }

  // The concrete instance, if it has attribute type Psi.
  template <class Psi>
  const InvariantInstance<Psi>* get_if() const {
    auto* m = dynamic_cast<const Model<Psi>*>(self_.get());
    return m ? &m->inst : nullptr;
  }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual const std::string& name() const = 0;
    virtual const std::string& template_name() const = 0;
    virtual const std::string& label() const = 0;
    virtual Strategy strategy() const = 0;
    virtual bool phi_structured() const = 0;
    virtual bool eval(const Policy& g) const = 0;
    virtual std::vector<OffendingFlowSet> offending_flows(const Policy& g,
                                                          std::size_t edge_bound) const = 0;
    virtual std::vector<HostId> configured_hosts() const = 0;
  };

  template <class Psi>
  struct Model final : Concept {
    explicit Model(InvariantInstance<Psi> i) : inst(std::move(i)), mapping(inst.mapping()) {}

    const std::string& name() const override { return inst.display_name(); }
    const std::string& template_name() const override { return inst.tmpl.name; }
    const std::string& label() const override { return inst.label; }
    Strategy strategy() const override { return inst.tmpl.strategy; }
    bool phi_structured() const override { return inst.tmpl.phi_structured(); }
    bool eval(const Policy& g) const override { return inst.tmpl.eval(g, mapping); }
    std::vector<OffendingFlowSet> offending_flows(const Policy& g,
                                                  std::size_t edge_bound) const override {
      return polverif::offending_flows(inst.tmpl, g, mapping, edge_bound);
    }
    std::vector<HostId> configured_hosts() const override {
      std::vector<HostId> out;
      for (const auto& [h, _] : inst.config.entries()) out.push_back(h);
      return out;
    }

    InvariantInstance<Psi> inst;
    HostMapping<Psi> mapping;
  };

  std::shared_ptr<const Concept> self_;
};

// All invariants hold. True for an empty list.
bool compose(std::span<const AnyInvariant> invariants, const Policy& g);

}  // namespace polverif
