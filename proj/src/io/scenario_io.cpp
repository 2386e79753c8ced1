#include "polverif/io/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace polverif::io {

namespace {

using Kind = ScenarioError::Kind;

std::string line_column(std::string_view doc, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < doc.size(); ++i) {
    if (doc[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json parse_json(std::string_view doc) {
  // Duplicate object keys would otherwise be silently collapsed.
  std::vector<std::set<std::string>> open_objects;
  std::string duplicate;
  auto callback = [&](int /*depth*/, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start: open_objects.emplace_back(); break;
      case Json::parse_event_t::object_end:
        if (!open_objects.empty()) open_objects.pop_back();
        break;
      case Json::parse_event_t::key:
        if (!open_objects.empty() && !open_objects.back().insert(parsed.get<std::string>()).second &&
            duplicate.empty())
          duplicate = parsed.get<std::string>();
        break;
      default: break;
    }
    return true;
  };
  Json j;
  try {
    j = Json::parse(doc.begin(), doc.end(), callback);
  } catch (const Json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ScenarioError(Kind::syntax, "", line_column(doc, byte), e.what());
  }
  if (!duplicate.empty())
    throw ScenarioError(Kind::syntax, duplicate, "", "duplicate key '" + duplicate + "'");
  return j;
}

void reject_unknown_keys(const Json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& path) {
  for (const auto& [k, _] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw ScenarioError(Kind::schema, k, path.empty() ? "/" : path, "unexpected key '" + k + "'");
}

const Json& section(const Json& root, const char* key, const Json& empty) {
  if (!root.contains(key)) return empty;
  const Json& s = root.at(key);
  if (!s.is_array())
    throw ScenarioError(Kind::schema, key, std::string("/") + key, std::string(key) + " must be an array");
  return s;
}

HostId host_name(const Json& j, const std::string& path) {
  if (!j.is_string() || j.get_ref<const std::string&>().empty())
    throw ScenarioError(Kind::schema, "", path, "host names must be non-empty strings");
  return HostId(j.get<std::string>());
}

}  // namespace

Scenario parse_scenario(std::string_view document, const TemplateRegistry& registry) {
  const Json root = parse_json(document);
  if (!root.is_object()) throw ScenarioError(Kind::schema, "", "/", "scenario must be a JSON object");
  reject_unknown_keys(root, {"hosts", "flows", "invariants"}, "");
  const Json empty = Json::array();

  std::set<HostId> hosts;
  const Json& jh = section(root, "hosts", empty);
  for (std::size_t i = 0; i < jh.size(); ++i) {
    const std::string path = "/hosts/" + std::to_string(i);
    HostId h = host_name(jh[i], path);
    if (!hosts.insert(h).second)
      throw ScenarioError(Kind::schema, h.name(), path, "duplicate host '" + h.name() + "'");
  }

  std::set<Flow> flows;
  const Json& jf = section(root, "flows", empty);
  for (std::size_t i = 0; i < jf.size(); ++i) {
    const std::string path = "/flows/" + std::to_string(i);
    if (!jf[i].is_array() || jf[i].size() != 2)
      throw ScenarioError(Kind::schema, "", path, "a flow is a [sender, receiver] pair");
    Flow f{host_name(jf[i][0], path + "/0"), host_name(jf[i][1], path + "/1")};
    for (const HostId* end : {&f.src, &f.dst})
      if (!hosts.contains(*end))
        throw ScenarioError(Kind::unknown_host, end->name(), path,
                            "flow endpoint '" + end->name() + "' is not a listed host");
    if (!flows.insert(f).second)
      throw ScenarioError(Kind::schema, "", path, "duplicate flow");
  }

  std::vector<AnyInvariant> invariants;
  const Json& ji = section(root, "invariants", empty);
  for (std::size_t i = 0; i < ji.size(); ++i) {
    const std::string path = "/invariants/" + std::to_string(i);
    const Json& inv = ji[i];
    if (!inv.is_object()) throw ScenarioError(Kind::schema, "", path, "an invariant is an object");
    reject_unknown_keys(inv, {"template", "name", "attributes"}, path);
    if (!inv.contains("template") || !inv.at("template").is_string())
      throw ScenarioError(Kind::schema, "template", path, "missing template name");
    const std::string key = inv.at("template").get<std::string>();
    const TemplateRegistry::Entry* entry = registry.find(key);
    if (!entry)
      throw ScenarioError(Kind::unknown_template, key, path + "/template",
                          "unknown template '" + key + "'");
    std::string label;
    if (inv.contains("name")) {
      if (!inv.at("name").is_string())
        throw ScenarioError(Kind::schema, "name", path + "/name", "name must be a string");
      label = inv.at("name").get<std::string>();
    }
    const Json attrs = inv.contains("attributes") ? inv.at("attributes") : Json::object();
    if (attrs.is_object()) {
      for (const auto& [h, _] : attrs.items())
        if (!h.empty() && !hosts.contains(HostId(h)))
          throw ScenarioError(Kind::unknown_host, h, path + "/attributes/" + h,
                              "unknown host '" + h + "'");
    }
    invariants.push_back(entry->load(attrs, std::move(label), path + "/attributes"));
  }

  return make_scenario(make_policy(std::move(hosts), std::move(flows)), std::move(invariants));
}

Scenario load_scenario_file(const std::filesystem::path& path, const TemplateRegistry& registry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(Kind::io, path.string(), path.string(), "cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), registry);
}

Json scenario_to_json(const Scenario& s, const TemplateRegistry& registry) {
  Json root = Json::object();
  root["hosts"] = Json::array();
  for (const HostId& h : s.policy.hosts()) root["hosts"].push_back(h.name());
  root["flows"] = Json::array();
  for (const Flow& f : s.policy.flows()) root["flows"].push_back(Json::array({f.src.name(), f.dst.name()}));
  root["invariants"] = Json::array();
  for (const AnyInvariant& inv : s.invariants) {
    const TemplateRegistry::Entry* entry = registry.find_for(inv);
    if (!entry)
      throw std::invalid_argument("no registered template for invariant '" + inv.name() + "'");
    Json j = Json::object();
    j["template"] = entry->key;
    if (!inv.label().empty()) j["name"] = inv.label();
    j["attributes"] = *entry->encode(inv);
    root["invariants"].push_back(std::move(j));
  }
  return root;
}

std::string serialize_scenario(const Scenario& s, const TemplateRegistry& registry) {
  return scenario_to_json(s, registry).dump(2) + "\n";
}

}  // namespace polverif::io
