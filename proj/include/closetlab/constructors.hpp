#pragma once

#include <vector>

#include "closetlab/order.hpp"
#include "closetlab/set_operator.hpp"
#include "closetlab/subset.hpp"

namespace closetlab {

class EnrichedCloset;

// A -> down-closure of A.
SetOperator alexandrov(const Qoset& q);

// A -> lower bounds of the upper bounds of A.
SetOperator dedekind_macneille(const Qoset& q);

// A -> union of D^{ul} over nonempty directed D inside down(A) that have a
// supremum. Throws InvalidStructure on a non-antisymmetric order.
SetOperator directed_sup(const Qoset& q);

// A -> down{ m(x) : x in down(A) } for a monotone inflationary self-map m.
SetOperator inflationary(const Qoset& q, const SpaceMap& m);

// A -> down_P{ l(y) : y in down_Q r(A) } with l: Q -> P and r: P -> Q
// monotone and x <= l(r(x)). Strict mode also demands that r reflects the
// order and that either r(l(y)) <= y for all y or r is onto.
SetOperator novak(const Qoset& p, const Qoset& q, const SpaceMap& l, const SpaceMap& r,
                  bool strict = false);

// A -> { x : phi(x) in down(A) for some phi }. Every phi must be monotone
// and at least one must be deflationary.
SetOperator selfmap_family(const Qoset& q, const std::vector<SpaceMap>& phis);

// A -> { x : down(x) inside down(A) union (P - K) }, K nonempty.
SetOperator compact_set(const Qoset& q, Subset k);

// Closure for the topology whose subbasic closed sets are the principal
// ideals: the intersection of all finite unions of ideals containing A.
SetOperator upper_topology(const Qoset& q);

// A -> union of c(D) over members D of fam inside bracket(A). Throws
// InvalidStructure naming an element x with x not in result({x}).
SetOperator generated_operator(const SetOperator& bracket, const SetOperator& c,
                               const SubsetFamily& fam);
SetOperator generated_operator(const EnrichedCloset& ec, const SubsetFamily& fam);

}  // namespace closetlab
