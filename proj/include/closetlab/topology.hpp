#pragma once

#include <optional>
#include <string>
#include <utility>

#include "closetlab/closet.hpp"
#include "closetlab/report.hpp"

namespace closetlab {

// Up to this many elements the topology tests quantify over all pairs
// literally; above it they use the equivalent single-element reductions.
inline constexpr unsigned kLiteralPairCap = 10;

struct TopologyResult {
  // Open sets form a topology.
  bool topological = true;
  // The associated closure is Kuratowski.
  bool kuratowski = true;
  // On failure: the first reason found, with c(empty) reported before
  // anything else.
  std::string reason;
  std::optional<std::pair<Subset, Subset>> witness;
};

// Throws InvalidStructure unless op is a preclosure operator.
TopologyResult is_topological(const SetOperator& op);

// Nonempty R such that R inside F u F' (both closed) forces R inside F or
// R inside F'.
SubsetFamily irreducible_subsets(const SetOperator& c);
bool is_generated_by_irreducibles(const EnrichedCloset& ec);

// [.] topological and c generated by irreducibles implies c topological;
// continuous and c topological implies c generated by irreducibles, with
// every dd(x) irreducible.
Report prop_topological(const EnrichedCloset& ec);

// The direct and Kuratowski verdicts must agree.
Report topology_agreement(const SetOperator& op);

}  // namespace closetlab
