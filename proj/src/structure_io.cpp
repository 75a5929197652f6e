#include "closetlab/structure_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "closetlab/constructors.hpp"
#include "closetlab/errors.hpp"
#include "closetlab/fixtures.hpp"

namespace closetlab {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

unsigned element(const Universe& u, const std::string& name, const std::string& path) {
  auto i = u.find(name);
  if (!i) bad(path, "unknown element '" + name + "'");
  return *i;
}

Subset element_set(const Universe& u, const Json& j, const std::string& path) {
  Subset out;
  for (const auto& name : string_array(j, path)) out = out.with(element(u, name, path));
  return out;
}

Universe parse_universe(const Json& j, const std::string& path) {
  auto names = string_array(j, path);
  return Universe(std::move(names));
}

Qoset parse_order(const Universe& u, const Json* j, const std::string& path) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  if (j) {
    if (!j->is_array()) bad(path, "expected an array of [a, b] pairs");
    for (std::size_t i = 0; i < j->size(); ++i) {
      std::string at = path + "[" + std::to_string(i) + "]";
      const Json& p = (*j)[i];
      if (!p.is_array() || p.size() != 2) bad(at, "expected a pair [a, b]");
      pairs.emplace_back(element(u, as_string(p[0], at), at), element(u, as_string(p[1], at), at));
    }
  }
  return qoset_from_index_pairs(u, pairs);
}

SpaceMap parse_map(const Json& j, const Universe& from, const Universe& to, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object mapping element names");
  std::vector<unsigned> image(from.size(), 0);
  std::vector<bool> seen(from.size(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    unsigned x = element(from, it.key(), path);
    image[x] = element(to, as_string(it.value(), path + "." + it.key()), path + "." + it.key());
    seen[x] = true;
  }
  for (unsigned x = 0; x < from.size(); ++x) {
    if (!seen[x]) bad(path, "no image for '" + from.name(x) + "'");
  }
  return SpaceMap(from, to, std::move(image));
}

SetOperator parse_table(const Json& j, const Universe& u, const std::string& path) {
  const Json& entries = member(j, "entries", path);
  if (!entries.is_object()) bad(path + ".entries", "expected an object from hex mask to hex mask");
  std::vector<Subset> table(u.subset_count());
  std::vector<bool> seen(u.subset_count(), false);
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    std::string at = path + ".entries." + it.key();
    Subset key = hex_to_mask(it.key(), u);
    if (seen[key.bits()]) bad(at, "duplicate entry");
    table[key.bits()] = hex_to_mask(as_string(it.value(), at), u);
    seen[key.bits()] = true;
  }
  for (std::size_t m = 0; m < seen.size(); ++m) {
    if (!seen[m]) bad(path + ".entries", "missing entry for " + mask_to_hex(Subset(static_cast<Subset::Bits>(m))));
  }
  return SetOperator::from_table(u, std::move(table));
}

SetOperator parse_c(const Json& j, const Qoset& q, const SetOperator& bracket, const std::string& path) {
  const auto& u = q.universe();
  std::string kind = as_string(member(j, "kind", path), path + ".kind");
  if (kind == "alexandrov") return alexandrov(q);
  if (kind == "dedekind_macneille") return dedekind_macneille(q);
  if (kind == "directed_sup") return directed_sup(q);
  if (kind == "upper_topology") return upper_topology(q);
  if (kind == "inflationary") return inflationary(q, parse_map(member(j, "map", path), u, u, path + ".map"));
  if (kind == "novak") {
    Universe qu = parse_universe(member(j, "q_elements", path), path + ".q_elements");
    auto it = j.find("q_order");
    Qoset qq = parse_order(qu, it == j.end() ? nullptr : &*it, path + ".q_order");
    SpaceMap l = parse_map(member(j, "l", path), qu, u, path + ".l");
    SpaceMap r = parse_map(member(j, "r", path), u, qu, path + ".r");
    bool strict = false;
    if (auto s = j.find("strict"); s != j.end()) {
      if (!s->is_boolean()) bad(path + ".strict", "expected a boolean");
      strict = s->get<bool>();
    }
    return novak(q, qq, l, r, strict);
  }
  if (kind == "selfmap_family") {
    const Json& maps = member(j, "maps", path);
    if (!maps.is_array()) bad(path + ".maps", "expected an array of maps");
    std::vector<SpaceMap> phis;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      phis.push_back(parse_map(maps[i], u, u, path + ".maps[" + std::to_string(i) + "]"));
    }
    return selfmap_family(q, phis);
  }
  if (kind == "compact_set") return compact_set(q, element_set(u, member(j, "K", path), path + ".K"));
  if (kind == "generated") {
    SetOperator base = parse_c(member(j, "base", path), q, bracket, path + ".base");
    const Json& fam = member(j, "family", path);
    if (!fam.is_array()) bad(path + ".family", "expected an array of element lists");
    SubsetFamily family(u);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      family.insert(element_set(u, fam[i], path + ".family[" + std::to_string(i) + "]"));
    }
    return generated_operator(bracket, base, family);
  }
  if (kind == "table") return parse_table(j, u, path);
  bad(path + ".kind", "unknown operator kind '" + kind + "'");
}

Json map_names(const SpaceMap& f) {
  Json out = Json::object();
  for (unsigned x = 0; x < f.source().size(); ++x) out[f.source().name(x)] = f.target().name(f(x));
  return out;
}

Json table_json(const SetOperator& op) {
  Json entries = Json::object();
  for (std::size_t m = 0; m < op.universe().subset_count(); ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    entries[mask_to_hex(a)] = mask_to_hex(op(a));
  }
  return Json{{"kind", "table"}, {"entries", entries}};
}

Json order_json(const Qoset& q) {
  Json out = Json::array();
  for (auto [a, b] : generating_pairs(q)) out.push_back(Json::array({q.universe().name(a), q.universe().name(b)}));
  return out;
}

Json chain_doc(const std::string& name, unsigned n, Json c) {
  Json elements = Json::array();
  Json order = Json::array();
  for (unsigned i = 0; i < n; ++i) elements.push_back(std::to_string(i));
  for (unsigned i = 0; i + 1 < n; ++i) order.push_back(Json::array({std::to_string(i), std::to_string(i + 1)}));
  return Json{
      {"name", name}, {"elements", elements}, {"order", order}, {"bracket", {{"kind", "alexandrov"}}}, {"c", c}};
}

Json order_doc(const std::string& name, const Qoset& q, Json c) {
  return Json{{"name", name},
              {"elements", q.universe().names()},
              {"order", order_json(q)},
              {"bracket", {{"kind", "alexandrov"}}},
              {"c", c}};
}

}  // namespace

std::string mask_to_hex(Subset s) {
  std::ostringstream out;
  out << std::hex << s.bits();
  return out.str();
}

Subset hex_to_mask(const std::string& text, const Universe& u) {
  if (text.empty() || text.size() > 8) throw ParseError("bad hex mask '" + text + "'");
  Subset::Bits bits = 0;
  for (char ch : text) {
    unsigned digit;
    if (ch >= '0' && ch <= '9') {
      digit = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      digit = static_cast<unsigned>(ch - 'a' + 10);
    } else {
      throw ParseError("bad hex mask '" + text + "'");
    }
    bits = (bits << 4) | digit;
  }
  Subset s(bits);
  if (!u.contains(s)) throw ParseError("mask '" + text + "' has bits outside the universe");
  return s;
}

bool is_fixture_name(const std::string& name) {
  for (const auto& n : closet_fixture_names()) {
    if (n == name) return true;
  }
  for (const auto& n : order_fixture_names()) {
    if (n == name) return true;
  }
  return false;
}

Json fixture_document(const std::string& name) {
  if (name == "CHAIN3_SHIFT") {
    return chain_doc(name, 3, {{"kind", "inflationary"}, {"map", {{"0", "1"}, {"1", "2"}, {"2", "2"}}}});
  }
  if (name == "CHAIN3_PHI_ID") {
    Json identity = Json::array({{{"0", "0"}, {"1", "1"}, {"2", "2"}}});
    return chain_doc(name, 3, {{"kind", "selfmap_family"}, {"maps", identity}});
  }
  if (name == "ANTICHAIN2_K") {
    return order_doc(name, order_fixture("ANTICHAIN2"), {{"kind", "compact_set"}, {"K", Json::array({"p"})}});
  }
  static const std::map<std::string, std::string> raney{
      {"CHAIN3_RANEY", "CHAIN3"}, {"M3_RANEY", "M3"}, {"B2_RANEY", "B2"}, {"N5_RANEY", "N5"}};
  if (auto it = raney.find(name); it != raney.end()) {
    return order_doc(name, order_fixture(it->second), {{"kind", "dedekind_macneille"}});
  }
  for (const auto& n : order_fixture_names()) {
    if (n == name) return order_doc(name, order_fixture(name), {{"kind", "alexandrov"}});
  }
  throw ParseError("unknown fixture '" + name + "'");
}

ParsedSpace parse_space(const Json& doc) {
  try {
    if (doc.is_object() && doc.contains("fixture")) {
      std::string name = as_string(doc["fixture"], "fixture");
      if (!is_fixture_name(name)) bad("fixture", "unknown fixture '" + name + "'");
      return parse_space(fixture_document(name));
    }
    ParsedSpace out;
    if (auto it = doc.find("name"); it != doc.end()) out.name = as_string(*it, "name");
    Universe u = parse_universe(member(doc, "elements", "document"), "elements");
    auto order_it = doc.find("order");
    Qoset q = parse_order(u, order_it == doc.end() ? nullptr : &*order_it, "order");

    SetOperator bracket = alexandrov(q);
    if (auto it = doc.find("bracket"); it != doc.end()) {
      std::string kind = as_string(member(*it, "kind", "bracket"), "bracket.kind");
      if (kind == "table") {
        bracket = parse_table(*it, u, "bracket");
      } else if (kind != "alexandrov") {
        bad("bracket.kind", "expected 'alexandrov' or 'table'");
      }
    }
    SetOperator c = parse_c(member(doc, "c", "document"), q, bracket, "c");
    out.closet = std::make_shared<const EnrichedCloset>(assemble(bracket, c));

    if (auto it = doc.find("maps"); it != doc.end()) {
      if (!it->is_object()) bad("maps", "expected an object of named maps");
      for (auto m = it->begin(); m != it->end(); ++m) {
        std::string path = "maps." + m.key();
        std::shared_ptr<const EnrichedCloset> target = out.closet;
        if (auto t = m.value().find("target"); t != m.value().end()) target = parse_space(*t).closet;
        SpaceMap f = parse_map(member(m.value(), "map", path), u, target->universe(), path + ".map");
        std::optional<SpaceMap> right;
        if (auto r = m.value().find("right"); r != m.value().end()) {
          right = parse_map(*r, target->universe(), u, path + ".right");
        }
        out.maps.push_back(NamedMap{m.key(), std::move(f), target, std::move(right)});
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

ParsedSpace parse_space_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_space(doc);
}

ParsedSpace parse_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_space_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json serialize_closet(const EnrichedCloset& ec, const std::string& name) {
  Json out = Json::object();
  if (!name.empty()) out["name"] = name;
  out["elements"] = ec.universe().names();
  out["order"] = order_json(ec.order());
  out["bracket"] = ec.has_alexandrov_bracket() ? Json{{"kind", "alexandrov"}} : table_json(ec.bracket());
  out["c"] = table_json(ec.c());
  return out;
}

Json serialize_space(const ParsedSpace& space) {
  Json out = serialize_closet(*space.closet, space.name);
  if (space.maps.empty()) return out;
  Json maps = Json::object();
  for (const auto& m : space.maps) {
    Json entry{{"map", map_names(m.map)}};
    if (m.target != space.closet) entry["target"] = serialize_closet(*m.target);
    if (m.right) entry["right"] = map_names(*m.right);
    maps[m.name] = entry;
  }
  out["maps"] = maps;
  return out;
}

}  // namespace closetlab
