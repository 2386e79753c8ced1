#include "polverif/invariant.hpp"

namespace polverif {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::access_control: return "ACS";
    case Strategy::information_flow: return "IFS";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, Strategy s) { return os << to_string(s); }

std::ostream& operator<<(std::ostream& os, const OffendingFlowSet& f) {
  os << '{';
  for (std::size_t i = 0; i < f.flows.size(); ++i) {
    if (i) os << ", ";
    os << f.flows[i];
  }
  return os << '}';
}

TooLarge::TooLarge(std::size_t edges, std::size_t bound)
    : std::runtime_error("offending flow enumeration over " + std::to_string(edges) +
                         " flows exceeds the edge bound of " + std::to_string(bound)),
      edges_(edges),
      bound_(bound) {}

std::set<HostId> offenders(Strategy strategy, const OffendingFlowSet& f) {
  std::set<HostId> out;
  for (const Flow& e : f.flows)
    out.insert(strategy == Strategy::access_control ? e.src : e.dst);
  return out;
}

bool compose(std::span<const AnyInvariant> invariants, const Policy& g) {
  return std::all_of(invariants.begin(), invariants.end(),
                     [&](const AnyInvariant& i) { return i.eval(g); });
}

}  // namespace polverif
