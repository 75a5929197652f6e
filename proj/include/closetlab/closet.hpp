#pragma once

#include <utility>

#include "closetlab/order.hpp"
#include "closetlab/set_operator.hpp"

namespace closetlab {

// A closure operator (the bracket) with a compatible preclosure operator c:
// bracket(c(A)) = c(A) = c(bracket(A)) for every A.
class EnrichedCloset {
 public:
  const Universe& universe() const { return bracket_.universe(); }
  unsigned size() const { return universe().size(); }
  const SetOperator& bracket() const { return bracket_; }
  const SetOperator& c() const { return c_; }
  // Specialization quasiorder of the bracket: x <= y iff x in bracket({y}).
  const Qoset& order() const { return order_; }
  // The bracket is A -> down(A) for its specialization order.
  bool has_alexandrov_bracket() const { return alexandrov_; }

 private:
  friend EnrichedCloset assemble(SetOperator bracket, SetOperator c);
  EnrichedCloset(SetOperator bracket, SetOperator c, Qoset order, bool alexandrov)
      : bracket_(std::move(bracket)), c_(std::move(c)), order_(std::move(order)), alexandrov_(alexandrov) {}

  SetOperator bracket_;
  SetOperator c_;
  Qoset order_;
  bool alexandrov_;
};

// Validates classification and compatibility exhaustively. Throws
// InvalidStructure with the first witness subset.
EnrichedCloset assemble(SetOperator bracket, SetOperator c);

// Throws InvalidStructure unless bracket is a closure operator.
Qoset specialization(const SetOperator& bracket);

}  // namespace closetlab
