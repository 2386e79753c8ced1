#include "polverif/templates/bell_lapadula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace polverif::templates {

namespace {

constexpr std::array<std::string_view, 4> kClearanceNames = {"unclassified", "confidential",
                                                             "secret", "topsecret"};

bool blp_allows(Clearance sender, Clearance receiver) { return sender <= receiver; }

bool blp_trust_allows(const BlpTrustAttr& sender, const BlpTrustAttr& receiver) {
  return receiver.trusted || sender.sc <= receiver.sc;
}

}  // namespace

std::string_view to_string(Clearance c) { return kClearanceNames[static_cast<std::size_t>(c)]; }

std::optional<Clearance> parse_clearance(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (std::size_t i = 0; i < kClearanceNames.size(); ++i)
    if (lower == kClearanceNames[i]) return static_cast<Clearance>(i);
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, Clearance c) { return os << to_string(c); }

std::vector<Clearance> all_clearances() {
  return {Clearance::unclassified, Clearance::confidential, Clearance::secret,
          Clearance::topsecret};
}

std::ostream& operator<<(std::ostream& os, const BlpTrustAttr& a) {
  return os << '(' << a.sc << ", " << (a.trusted ? "trusted" : "untrusted") << ')';
}

std::vector<BlpTrustAttr> all_blp_trust_attrs() {
  std::vector<BlpTrustAttr> out;
  for (Clearance c : all_clearances())
    for (bool t : {false, true}) out.push_back({c, t});
  return out;
}

Template<Clearance> blp_basic() {
  Template<Clearance> t;
  t.name = "Simplified Bell LaPadula";
  t.strategy = Strategy::information_flow;
  t.default_attr = Clearance::unclassified;
  t.eval = [](const Policy& g, const HostMapping<Clearance>& nP) {
    return std::all_of(g.flows().begin(), g.flows().end(),
                       [&](const Flow& f) { return nP(f.src) <= nP(f.dst); });
  };
  t.phi = PhiStructure<Clearance>{blp_allows, false};
  return t;
}

Template<BlpTrustAttr> blp_trust() {
  Template<BlpTrustAttr> t;
  t.name = "Simplified Bell LaPadula with Trust";
  t.strategy = Strategy::information_flow;
  t.default_attr = BlpTrustAttr{Clearance::unclassified, false};
  t.eval = [](const Policy& g, const HostMapping<BlpTrustAttr>& nP) {
    for (const Flow& f : g.flows()) {
      const BlpTrustAttr& r = nP(f.dst);
      if (r.trusted) continue;
      if (!(nP(f.src).sc <= r.sc)) return false;
    }
    return true;
  };
  t.phi = PhiStructure<BlpTrustAttr>{blp_trust_allows, false};
  return t;
}

}  // namespace polverif::templates
