#pragma once

#include <cstdint>
#include <optional>

#include "closetlab/closet.hpp"
#include "closetlab/interpolation.hpp"
#include "closetlab/report.hpp"

namespace closetlab {

struct GenerationResult {
  bool generated = true;
  // First A (bitmask order) with c(A) != union of c(D), D in fam inside [A].
  std::optional<Subset> witness;
};

GenerationResult is_generated_by(const SetOperator& bracket, const SetOperator& c, const SubsetFamily& fam);
GenerationResult is_generated_by(const EnrichedCloset& ec, const SubsetFamily& fam);

// Generated by the relatively-closed subsets.
bool is_inner_regular(const EnrichedCloset& ec);

// {dd(x) : x in P}
SubsetFamily way_below_ideals(const EnrichedCloset& ec);

// On an inner-regular closet, every {x} and down(x) is relatively-closed.
Report lemma_singletons(const EnrichedCloset& ec);

// On a continuous closet: fam generates c iff every dd(x) is [D] for some D
// in fam; inner-regular iff every dd(x) is relatively-closed.
Report prop_generation_by_ideals(const EnrichedCloset& ec, const SubsetFamily& fam);

// A continuous closet is generated by {dd(x)}; a strongly continuous one is
// inner-regular.
Report generation_remarks(const EnrichedCloset& ec);

// On a continuous closet: strongly continuous iff c is generated by a
// union-complete family of relatively-closed weakly-closed subsets. The
// candidates tried are the family {dd(x)}, the family of all weakly-closed
// relatively-closed subsets, and the caller's family if given.
Report theorem_union_complete_generation(const EnrichedCloset& ec,
                                         const std::optional<SubsetFamily>& candidate = std::nullopt,
                                         std::uint64_t cap = kDefaultUnionCap);

}  // namespace closetlab
