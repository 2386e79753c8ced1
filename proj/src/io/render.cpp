#include "polverif/io/render.hpp"

#include <sstream>

namespace polverif::io {

namespace {

Json flow_json(const Flow& f) { return Json::array({f.src.name(), f.dst.name()}); }

Json flows_json(const std::vector<Flow>& flows) {
  Json out = Json::array();
  for (const Flow& f : flows) out.push_back(flow_json(f));
  return out;
}

void list_flows(std::ostream& os, const char* heading, const std::vector<Flow>& flows) {
  os << heading << " (" << flows.size() << "):\n";
  for (const Flow& f : flows) os << "  " << f.src << " -> " << f.dst << '\n';
}

}  // namespace

std::string render_report_text(const VerificationReport& report, std::size_t display_limit) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < report.invariants.size(); ++i) {
    const InvariantResult& r = report.invariants[i];
    os << '[' << (r.holds ? "OK  " : "FAIL") << "] " << r.name;
    if (r.name != r.template_name) os << " (" << r.template_name << ')';
    os << ", " << r.strategy << '\n';
    if (r.holds) continue;
    ++failed;
    if (r.offending.empty()) {
      os << "  no set of offending flows: the violation cannot be repaired by removing flows\n";
      continue;
    }
    os << "  offending flow sets: " << r.offending.size() << '\n';
    std::size_t shown = 0, total = 0;
    for (const OffendingFlowSet& f : r.offending) {
      total += f.size();
      if (shown >= display_limit) continue;
      os << "    {";
      std::size_t k = 0;
      for (; k < f.size() && shown < display_limit; ++k, ++shown)
        os << (k ? ", " : "") << f.flows[k];
      os << (k < f.size() ? ", ...}" : "}") << '\n';
    }
    if (total > shown) os << "    ... " << (total - shown) << " more flows not shown\n";
    os << "  offending hosts:";
    for (const HostId& h : r.offender_hosts) os << ' ' << h;
    os << '\n';
  }
  os << "overall: " << (report.overall ? "all invariants hold" : "VIOLATED") << " ("
     << report.invariants.size() - failed << '/' << report.invariants.size() << " hold)\n";
  return os.str();
}

Json report_to_json(const VerificationReport& report) {
  Json out = Json::object();
  out["overall"] = report.overall;
  out["invariants"] = Json::array();
  for (const InvariantResult& r : report.invariants) {
    Json j = Json::object();
    j["name"] = r.name;
    j["template"] = r.template_name;
    j["strategy"] = std::string(to_string(r.strategy));
    j["phi_structured"] = r.phi_structured;
    j["holds"] = r.holds;
    j["offending"] = Json::array();
    for (const OffendingFlowSet& f : r.offending) j["offending"].push_back(flows_json(f.flows));
    j["offenders"] = Json::array();
    for (const HostId& h : r.offender_hosts) j["offenders"].push_back(h.name());
    out["invariants"].push_back(std::move(j));
  }
  return out;
}

std::string render_policy_text(const Policy& policy, bool maximal) {
  std::ostringstream os;
  std::vector<Flow> inter;
  for (const Flow& f : policy.flows())
    if (!f.reflexive()) inter.push_back(f);
  os << "hosts (" << policy.host_count() << "):";
  for (const HostId& h : policy.hosts()) os << ' ' << h;
  os << '\n';
  list_flows(os, "flows, in-host flows omitted", inter);
  if (!maximal) os << "note: sound, possibly non-maximal (not every invariant is phi-structured)\n";
  return os.str();
}

Json policy_to_json(const Policy& policy) {
  Json out = Json::object();
  out["hosts"] = Json::array();
  for (const HostId& h : policy.hosts()) out["hosts"].push_back(h.name());
  out["flows"] = flows_json(policy.flows());
  return out;
}

std::string render_diff_text(const PolicyDiff& d) {
  std::ostringstream os;
  list_flows(os, "violating flows (in the policy, forbidden by the invariants)", d.violating);
  list_flows(os, "missing flows (permitted by the invariants, absent from the policy)",
             d.permitted_missing);
  if (!d.reflexive.empty())
    os << "in-host flows are always permitted; " << d.reflexive.size()
       << " listed by the policy were not compared\n";
  if (!d.reference_maximal)
    os << "note: reference policy is sound, possibly non-maximal\n";
  return os.str();
}

Json diff_to_json(const PolicyDiff& d) {
  Json out = Json::object();
  out["violating"] = flows_json(d.violating);
  out["permitted_missing"] = flows_json(d.permitted_missing);
  out["reflexive"] = flows_json(d.reflexive);
  out["reference_maximal"] = d.reference_maximal;
  return out;
}

}  // namespace polverif::io
