#include <algorithm>
#include <map>
#include <sstream>

#include "polverif/io/render.hpp"

namespace polverif::io {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

enum class EdgeStyle { policy, violating, missing };

}  // namespace

std::string export_dot(const Policy& policy, const std::optional<PolicyDiff>& diff) {
  std::map<Flow, EdgeStyle> edges;
  for (const Flow& f : policy.flows())
    if (!f.reflexive()) edges.emplace(f, EdgeStyle::policy);
  if (diff) {
    for (const Flow& f : diff->violating)
      if (!f.reflexive()) edges.insert_or_assign(f, EdgeStyle::violating);
    for (const Flow& f : diff->permitted_missing)
      if (!f.reflexive()) edges.emplace(f, EdgeStyle::missing);
  }

  std::ostringstream os;
  os << "digraph policy {\n";
  for (const HostId& h : policy.hosts()) os << "  " << quoted(h.name()) << ";\n";
  for (const auto& [f, style] : edges) {
    os << "  " << quoted(f.src.name()) << " -> " << quoted(f.dst.name());
    if (style == EdgeStyle::violating) os << " [color=red]";
    if (style == EdgeStyle::missing) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace polverif::io
