#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "polverif/invariant.hpp"
#include "polverif/scenario.hpp"

namespace polverif::io {

using Json = nlohmann::ordered_json;

// Reads and writes one attribute literal. `parse` throws
// std::invalid_argument with a short reason on a malformed literal.
template <class Psi>
struct AttributeCodec {
  std::function<Psi(const Json&)> parse;
  std::function<Json(const Psi&)> format;
};

// Maps the template names used in scenario files to templates and their
// attribute literal syntax.
class TemplateRegistry {
 public:
  struct Entry {
    std::string key;
    std::string template_name;
    // attributes: object host -> literal. `path` prefixes error locations.
    std::function<AnyInvariant(const Json& attributes, std::string label, const std::string& path)>
        load;
    // nullopt if the invariant was not built from this entry's template.
    std::function<std::optional<Json>(const AnyInvariant&)> encode;
  };

  // blp_basic, blp_trust, domain_hierarchy, security_gateway.
  static TemplateRegistry builtin();

  template <class Psi>
  void add(std::string key, Template<Psi> tmpl, AttributeCodec<Psi> codec);

  const Entry* find(std::string_view key) const;
  const Entry* find_for(const AnyInvariant& inv) const;
  std::vector<std::string> keys() const;

 private:
  std::vector<Entry> entries_;
};

template <class Psi>
void TemplateRegistry::add(std::string key, Template<Psi> tmpl, AttributeCodec<Psi> codec) {
  using Kind = ScenarioError::Kind;
  Entry e;
  e.key = std::move(key);
  e.template_name = tmpl.name;
  e.load = [tmpl, codec](const Json& attrs, std::string label, const std::string& path) {
    InvariantInstance<Psi> inst{tmpl, {}, std::move(label)};
    if (!attrs.is_object())
      throw ScenarioError(Kind::schema, "attributes", path, "attributes must be an object");
    for (const auto& [host, literal] : attrs.items()) {
      const std::string where = path + "/" + host;
      if (host.empty()) throw ScenarioError(Kind::schema, host, where, "empty host name");
      std::optional<Psi> value;
      try {
        value = codec.parse(literal);
      } catch (const std::invalid_argument& err) {
        throw ScenarioError(Kind::bad_attribute, host, where,
                            "bad attribute " + literal.dump() + " for host '" + host +
                                "': " + err.what());
      }
      inst.config.insert(HostId(host), std::move(*value));
    }
    return AnyInvariant(std::move(inst));
  };
  e.encode = [codec, name = tmpl.name](const AnyInvariant& inv) -> std::optional<Json> {
    const auto* inst = inv.get_if<Psi>();
    if (!inst || inst->tmpl.name != name) return std::nullopt;
    Json out = Json::object();
    for (const auto& [h, a] : inst->config.entries()) out[h.name()] = codec.format(a);
    return out;
  };
  entries_.push_back(std::move(e));
}

}  // namespace polverif::io
