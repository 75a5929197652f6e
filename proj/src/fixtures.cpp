#include "closetlab/fixtures.hpp"

#include "closetlab/constructors.hpp"
#include "closetlab/errors.hpp"

namespace closetlab {

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

Qoset chain(unsigned n) {
  Universe u = Universe::indexed(n);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return qoset_from_index_pairs(u, pairs);
}

std::string unknown(std::string_view name) { return "unknown fixture '" + std::string(name) + "'"; }

}  // namespace

const std::vector<std::string>& order_fixture_names() {
  static const std::vector<std::string> names{"CHAIN3", "CHAIN4", "ANTICHAIN2", "B2", "M3", "N5"};
  return names;
}

Qoset order_fixture(std::string_view name) {
  if (name == "CHAIN3") return chain(3);
  if (name == "CHAIN4") return chain(4);
  if (name == "ANTICHAIN2") return discrete_order(Universe({"p", "q"}));
  if (name == "B2") {
    return qoset_from_pairs(Universe({"bot", "a", "b", "top"}),
                            Pairs{{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
  }
  if (name == "M3") {
    return qoset_from_pairs(Universe({"bot", "a", "b", "c", "top"}),
                            Pairs{{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}});
  }
  if (name == "N5") {
    return qoset_from_pairs(Universe({"bot", "a", "b", "c", "top"}),
                            Pairs{{"bot", "a"}, {"a", "b"}, {"b", "top"}, {"bot", "c"}, {"c", "top"}});
  }
  throw InvalidStructure(unknown(name));
}

const std::vector<std::string>& closet_fixture_names() {
  static const std::vector<std::string> names{"CHAIN3_SHIFT", "CHAIN3_RANEY", "M3_RANEY",     "B2_RANEY",
                                              "N5_RANEY",     "CHAIN3_PHI_ID", "ANTICHAIN2_K"};
  return names;
}

EnrichedCloset closet_fixture(std::string_view name) {
  if (name == "CHAIN3_SHIFT") {
    Qoset q = order_fixture("CHAIN3");
    SpaceMap shift(q.universe(), q.universe(), {1, 2, 2});
    return assemble(alexandrov(q), inflationary(q, shift));
  }
  if (name == "CHAIN3_PHI_ID") {
    Qoset q = order_fixture("CHAIN3");
    return assemble(alexandrov(q), selfmap_family(q, {SpaceMap::identity(q.universe())}));
  }
  if (name == "ANTICHAIN2_K") {
    Qoset q = order_fixture("ANTICHAIN2");
    return assemble(alexandrov(q), compact_set(q, q.universe().subset({"p"})));
  }
  static const std::pair<std::string_view, std::string_view> raney[] = {
      {"CHAIN3_RANEY", "CHAIN3"}, {"M3_RANEY", "M3"}, {"B2_RANEY", "B2"}, {"N5_RANEY", "N5"}};
  for (auto [fixture, order] : raney) {
    if (name == fixture) {
      Qoset q = order_fixture(order);
      return assemble(alexandrov(q), dedekind_macneille(q));
    }
  }
  throw InvalidStructure(unknown(name));
}

}  // namespace closetlab
