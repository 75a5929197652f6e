#pragma once

#include <vector>

#include "closetlab/report.hpp"
#include "closetlab/set_operator.hpp"
#include "closetlab/subset.hpp"

namespace closetlab {

inline const OperatorClass& classify_operator(const SetOperator& op) { return op.classification(); }

// Fixed points of a preclosure operator. Throws InvalidStructure when op is
// not extensive and monotone.
SubsetFamily closed_family(const SetOperator& op);
// Complements of the closed subsets.
SubsetFamily open_family(const SetOperator& op);

// Least closure operator above op: the intersection of all closed supersets.
SetOperator associated_closure(const SetOperator& op);

struct MooreCheck {
  bool holds = true;
  // Empty witness on failure means the full universe (the empty
  // intersection) is missing; otherwise two members whose intersection is
  // missing.
  std::vector<Subset> witness;
};

// Stability under intersections of every sub-collection. By finiteness this
// is membership of the full universe plus stability under pairwise meets.
MooreCheck moore_check(const SubsetFamily& family);

// Table of A -> union of f(B) over all B contained in A.
std::vector<Subset> union_over_subsets(const SetOperator& f);

// Closed subsets are those F with op(A) inside F for all A inside F; open
// subsets G are those where op(A) meeting G forces A meeting G.
Report lemma_closed_open(const SetOperator& op);

}  // namespace closetlab
