#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "closetlab/closet.hpp"
#include "closetlab/order.hpp"

namespace closetlab {

using Json = nlohmann::ordered_json;

struct NamedMap {
  std::string name;
  SpaceMap map;
  // Closet the map lands in; the source closet when the file gives none.
  std::shared_ptr<const EnrichedCloset> target;
  // Optional map back from the target, for adjoint-pair checks.
  std::optional<SpaceMap> right;
};

struct ParsedSpace {
  std::string name;
  std::shared_ptr<const EnrichedCloset> closet;
  std::vector<NamedMap> maps;
};

// Lowercase hex of the bitmask, bit i = element i.
std::string mask_to_hex(Subset s);
Subset hex_to_mask(const std::string& text, const Universe& u);

// Accepts either a structure document or {"fixture": NAME}. Throws
// ParseError for schema problems (with the offending field) and
// InvalidStructure when the described structure is not an enriched closet.
ParsedSpace parse_space(const Json& doc);
ParsedSpace parse_space_text(const std::string& text);
ParsedSpace parse_space_file(const std::string& path);

// Structure document for a builtin fixture, in its constructor form.
Json fixture_document(const std::string& name);
bool is_fixture_name(const std::string& name);

// Explicit form: elements, generating order pairs, bracket as "alexandrov"
// when it is, otherwise a table, and c as a table.
Json serialize_closet(const EnrichedCloset& ec, const std::string& name = "");
Json serialize_space(const ParsedSpace& space);

}  // namespace closetlab
