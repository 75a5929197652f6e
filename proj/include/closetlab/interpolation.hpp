#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "closetlab/closet.hpp"
#include "closetlab/order.hpp"
#include "closetlab/relation.hpp"
#include "closetlab/report.hpp"

namespace closetlab {

inline constexpr std::uint64_t kDefaultUnionCap = 1'000'000;

struct InterpolationResult {
  bool interpolating = true;
  // First pair (x, z), in lexicographic order, with x << z and no y
  // satisfying x << y << z.
  std::optional<std::pair<unsigned, unsigned>> witness;
};

InterpolationResult is_interpolating(const Relation& wb);
InterpolationResult is_interpolating(const EnrichedCloset& ec);

// The pairwise test, dd(x) = dd(dd(x)) for all x, and uu(x) = uu(uu(x)) for
// all x must agree.
Report interpolation_agreement(const EnrichedCloset& ec);

bool is_strongly_continuous(const EnrichedCloset& ec);

// With interpolation: x << y iff y in G inside up(x) for a way-upper G. The
// right-to-left direction is asserted regardless.
Report prop_interpolation_char(const EnrichedCloset& ec);

// c(c(D)) = c(D).
bool relatively_closed(const EnrichedCloset& ec, Subset d);
SubsetFamily relatively_closed_family(const EnrichedCloset& ec);

enum class UnionStatus { complete, incomplete, cap_exceeded };

struct UnionCompleteResult {
  UnionStatus status = UnionStatus::complete;
  // On incompleteness: the index member D and the offending union.
  std::optional<Subset> index;
  std::optional<Subset> union_set;
  std::uint64_t work = 0;
};

// Every monotone assignment x -> D_x from a member D into the family (x <= y
// in the bracket's specialization order forces D_x inside D_y) has its union
// in the family. The family of all lower sets is answered without search.
UnionCompleteResult union_complete(const SetOperator& bracket, const SubsetFamily& fam,
                                   std::uint64_t cap = kDefaultUnionCap);
UnionCompleteResult union_complete(const Qoset& order, const SubsetFamily& fam,
                                   std::uint64_t cap = kDefaultUnionCap);

// On a continuous closet: interpolation iff dd(c(A)) = dd([A]) for every A.
Report prop_way_below_images(const EnrichedCloset& ec);

// On a continuous closet whose way-upper sets are weakly-open: interpolation
// iff every uu(A) is open iff every uu(x) is open.
Report theorem_interpolation_open(const EnrichedCloset& ec);

// On a continuous closet with union-complete weakly-closed family:
// interpolation iff c is idempotent.
Report theorem_interpolation_idempotent(const EnrichedCloset& ec, std::uint64_t cap = kDefaultUnionCap);

// With union-complete weakly-closed family: strongly continuous iff c is
// idempotent and preserves meets of weakly-closed sets.
Report corollary_strong_continuity(const EnrichedCloset& ec, std::uint64_t cap = kDefaultUnionCap);

// With union-complete weakly-closed family and idempotent c: continuous iff
// every open set is way-upper.
Report prop_open_way_upper(const EnrichedCloset& ec, std::uint64_t cap = kDefaultUnionCap);

// Raney's relation y <| x of a finite complete lattice by the closed form
// x not <= sup(L - up(y)). Throws InvalidStructure on a non-lattice.
Relation raney_relation(const Qoset& lattice);
// x = sup{y : y <| x} for every x.
bool completely_distributive(const Qoset& lattice);
// The family ordered by inclusion must contain the full set and be closed
// under pairwise intersection; throws InvalidStructure otherwise.
bool completely_distributive(const SubsetFamily& lattice);

inline constexpr std::size_t kDefaultLatticeCap = 4096;

// Strongly continuous implies the closed family is completely distributive.
// Skipped (fact left empty) when the closed family exceeds lattice_cap.
Report corollary_complete_distributivity(const EnrichedCloset& ec, std::size_t lattice_cap = kDefaultLatticeCap);

// On a continuous closet, x << y with dd(dd(y)) weakly-closed and
// relatively-closed has an interpolant.
Report interpolation_lemma(const EnrichedCloset& ec);

}  // namespace closetlab
