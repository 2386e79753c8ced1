#include "polverif/io/registry.hpp"

#include <algorithm>
#include <stdexcept>

#include "polverif/templates.hpp"

namespace polverif::io {

namespace t = polverif::templates;

namespace {

const std::string& expect_string(const Json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string("expected ") + what);
  return j.get_ref<const std::string&>();
}

t::Clearance parse_clearance_json(const Json& j) {
  const std::string& s = expect_string(j, "a clearance name");
  auto c = t::parse_clearance(s);
  if (!c) throw std::invalid_argument("unknown clearance '" + s + "'");
  return *c;
}

// Objects with a fixed set of keys; anything else is a typo.
void expect_keys(const Json& j, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw std::invalid_argument("expected an object");
  for (const auto& [k, _] : j.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
      throw std::invalid_argument("unexpected key '" + k + "'");
}

std::size_t parse_trust_level(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw std::invalid_argument("trust must be a non-negative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

AttributeCodec<t::Clearance> clearance_codec() {
  return {parse_clearance_json, [](const t::Clearance& c) { return Json(t::to_string(c)); }};
}

AttributeCodec<t::BlpTrustAttr> blp_trust_codec() {
  return {[](const Json& j) {
            expect_keys(j, {"sc", "trust"});
            if (!j.contains("sc")) throw std::invalid_argument("missing 'sc'");
            t::BlpTrustAttr a;
            a.sc = parse_clearance_json(j.at("sc"));
            if (j.contains("trust")) {
              if (!j.at("trust").is_boolean()) throw std::invalid_argument("trust must be a boolean");
              a.trusted = j.at("trust").get<bool>();
            }
            return a;
          },
          [](const t::BlpTrustAttr& a) {
            Json out = Json::object();
            out["sc"] = std::string(t::to_string(a.sc));
            out["trust"] = a.trusted;
            return out;
          }};
}

AttributeCodec<t::DomAttr> dom_attr_codec() {
  return {[](const Json& j) {
            expect_keys(j, {"level", "trust"});
            if (!j.contains("level")) throw std::invalid_argument("missing 'level'");
            const std::string& s = expect_string(j.at("level"), "a dotted domain name");
            auto level = t::DomainName::parse(s);
            if (!level) throw std::invalid_argument("malformed domain name '" + s + "'");
            t::DomAttr a{*level, 0};
            if (j.contains("trust")) a.trust = parse_trust_level(j.at("trust"));
            return a;
          },
          [](const t::DomAttr& a) {
            if (!a.level.is_name())
              throw std::invalid_argument("only proper domain names can be written");
            Json out = Json::object();
            out["level"] = a.level.to_string();
            out["trust"] = a.trust;
            return out;
          }};
}

AttributeCodec<t::SgwRole> sgw_codec() {
  return {[](const Json& j) {
            const std::string& s = expect_string(j, "a gateway role");
            auto r = t::parse_sgw_role(s);
            if (!r) throw std::invalid_argument("unknown role '" + s + "'");
            return *r;
          },
          [](const t::SgwRole& r) { return Json(t::to_string(r)); }};
}

}  // namespace

TemplateRegistry TemplateRegistry::builtin() {
  TemplateRegistry r;
  r.add("blp_basic", t::blp_basic(), clearance_codec());
  r.add("blp_trust", t::blp_trust(), blp_trust_codec());
  r.add("domain_hierarchy", t::domain_hierarchy(), dom_attr_codec());
  r.add("security_gateway", t::security_gateway(), sgw_codec());
  return r;
}

const TemplateRegistry::Entry* TemplateRegistry::find(std::string_view key) const {
  for (const Entry& e : entries_)
    if (e.key == key) return &e;
  return nullptr;
}

const TemplateRegistry::Entry* TemplateRegistry::find_for(const AnyInvariant& inv) const {
  for (const Entry& e : entries_)
    if (e.template_name == inv.template_name() && e.encode(inv)) return &e;
  return nullptr;
}

std::vector<std::string> TemplateRegistry::keys() const {
  std::vector<std::string> out;
  for (const Entry& e : entries_) out.push_back(e.key);
  return out;
}

}  // namespace polverif::io
