#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "closetlab/subset.hpp"

namespace closetlab {

// Extensive / monotone / idempotent flags of a set operator. Each false
// flag carries the first counterexample in bitmask order.
struct OperatorClass {
  bool extensive = true;
  bool monotone = true;
  bool idempotent = true;
  std::optional<Subset> not_extensive_at;
  // (A, B) with A a subset of B and op(A) not a subset of op(B)
  std::optional<std::pair<Subset, Subset>> not_monotone_at;
  std::optional<Subset> not_idempotent_at;

  bool preclosure() const { return extensive && monotone; }
  bool closure() const { return preclosure() && idempotent; }
};

// A total map from subsets to subsets of one universe.
//
// Rule-backed operators are evaluated lazily and memoized per input; the
// memo is safe for concurrent readers because every slot is written at
// most with one deterministic value. Table-backed operators are eager.
// Copies share the memo and the cached classification.
class SetOperator {
 public:
  using Rule = std::function<Subset(Subset)>;

  static SetOperator from_rule(Universe universe, std::string kind, Rule rule);
  static SetOperator from_table(Universe universe, std::vector<Subset> table,
                                std::string kind = "table");
  static SetOperator identity(Universe universe);

  Subset operator()(Subset a) const;

  const Universe& universe() const;
  const std::string& kind() const;

  // Exhaustive classification, computed once on first call.
  const OperatorClass& classification() const;
  bool is_preclosure() const { return classification().preclosure(); }
  bool is_closure() const { return classification().closure(); }

  // Full table indexed by bitmask.
  std::vector<Subset> table() const;

  // Pointwise equality over all subsets of a common universe.
  friend bool operator==(const SetOperator& a, const SetOperator& b);

 private:
  struct Impl;
  explicit SetOperator(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// First subset where the two operators differ, if any.
std::optional<Subset> first_difference(const SetOperator& a, const SetOperator& b);

}  // namespace closetlab
