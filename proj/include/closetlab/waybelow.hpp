#pragma once

#include <optional>

#include "closetlab/closet.hpp"
#include "closetlab/relation.hpp"
#include "closetlab/report.hpp"

namespace closetlab {

inline constexpr unsigned kDefaultGaloisCap = 10;

// x << y iff y in c(A) forces x in [A] for every A. Computed as
// dd(y) = intersection of [A] over all A with y in c(A).
Relation way_below(const EnrichedCloset& ec);

// Same relation for Alexandrov brackets, via x << y iff y not in c(P - up(x)).
// Throws InvalidStructure when the bracket is not A -> down(A).
Relation way_below_fast(const EnrichedCloset& ec);

// dd(A) = {x : x << a for some a in A}, uu(A) = {y : a << y for some a in A}.
inline Subset dd(const Relation& wb, Subset a) { return wb.preimage(a); }
inline Subset uu(const Relation& wb, Subset a) { return wb.image(a); }
Subset dd(const EnrichedCloset& ec, Subset a);
Subset uu(const EnrichedCloset& ec, Subset a);

struct ContinuityResult {
  bool continuous = true;
  // Every x with x not in c(dd(x)).
  Subset failing;
  // Highest-index failing element; in the shipped lattice fixtures this is
  // the top element.
  std::optional<unsigned> witness;
};

ContinuityResult is_continuous(const EnrichedCloset& ec, const Relation& wb);
ContinuityResult is_continuous(const EnrichedCloset& ec);

// The four equivalent forms of continuity. cond3 (Galois connection on
// weakly-closed subsets) is skipped above galois_cap elements.
Report theorem_continuity_equiv(const EnrichedCloset& ec, unsigned galois_cap = kDefaultGaloisCap);

// Weakly-open and way-upper implies open; the converse when continuous.
Report open_iff_wayupper(const EnrichedCloset& ec);

// On a continuous closet every dd(x) is connected.
Report corollary_connected_ideals(const EnrichedCloset& ec);

// x in c(dd(x) & B) for every x.
bool is_basis(const EnrichedCloset& ec, const Relation& wb, Subset b);
bool is_basis(const EnrichedCloset& ec, Subset b);
Subset compact_elements(const Relation& wb);
bool is_algebraic(const EnrichedCloset& ec);

// B is a basis iff the closet is continuous and x << y implies
// x in [dd(y) & B].
Report basis_prop_check(const EnrichedCloset& ec, Subset b);

// Transitivity of <<, << inside <=, <= ; << and << ; <= inside <<, and
// dd(x) inside down(x) inside c({x}).
Report basic_properties(const EnrichedCloset& ec);

// way_below_fast against way_below; hypothesis-not-met on non-Alexandrov
// brackets.
Report way_below_agreement(const EnrichedCloset& ec);

}  // namespace closetlab
