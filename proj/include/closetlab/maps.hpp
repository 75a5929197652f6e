#pragma once

#include <optional>

#include "closetlab/closet.hpp"
#include "closetlab/order.hpp"
#include "closetlab/report.hpp"

namespace closetlab {

struct MapCheck {
  bool holds = true;
  // First subset (bitmask order) where the inclusion fails; for closure
  // continuity this is the closed subset of the target.
  std::optional<Subset> witness;
};

// f(c(A)) inside c'(f(A)) for every A, including A empty.
MapCheck is_strictly_continuous(const SpaceMap& f, const SetOperator& c, const SetOperator& c2);
MapCheck is_strictly_continuous(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2);

// Preimages of c'-closed sets are c-closed.
MapCheck is_closure_continuous(const SpaceMap& f, const SetOperator& c, const SetOperator& c2);
MapCheck is_closure_continuous(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2);

// f([A]) inside [f(A)] for every A.
MapCheck is_bracket_continuous(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2);

// x << y implies f(x) << f(y).
bool preserves_way_below(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2);

// phi(x) <= x' iff x <= psi(x').
bool is_galois_connection(const SpaceMap& phi, const SpaceMap& psi, const Qoset& p, const Qoset& p2);

// Strict implies closure continuity; the converse when c' is idempotent.
Report prop_strict_vs_closure(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2);

// Under phi^-1([A']) = [psi(A')] for all A': psi strictly continuous implies
// phi preserves <<, and with e continuous the converse. For two Alexandrov
// brackets the hypothesis is also compared with the Galois-connection test.
Report bandelt_erne(const SpaceMap& phi, const SpaceMap& psi, const EnrichedCloset& e, const EnrichedCloset& e2);

// For fam generating c and f bracket-continuous: f is strictly continuous
// iff f(c(D)) inside c'(f(D)) for all D in fam. Also checks the variant for
// inner-regular e and f preserving relatively-closed subsets.
Report prop_family_strict_continuity(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2,
                                     const SubsetFamily& fam);

// fam generates c and [A] = union of [D] over members D inside A.
bool jointly_generated(const SetOperator& bracket, const SetOperator& c, const SubsetFamily& fam);

// For a jointly generating fam with every f(D) relatively-closed in e2: f is
// closure-continuous iff f(c(D)) inside c'(f(D)) for all D in fam.
Report prop_joint_generation_closure(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2,
                                     const SubsetFamily& fam);

}  // namespace closetlab
