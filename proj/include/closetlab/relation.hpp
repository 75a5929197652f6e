#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "closetlab/subset.hpp"

namespace closetlab {

// A binary relation on a universe, stored row-wise: row x is {y : x R y}.
class Relation {
 public:
  explicit Relation(Universe universe);
  static Relation identity(Universe universe);

  const Universe& universe() const { return universe_; }
  unsigned size() const { return universe_.size(); }

  bool holds(unsigned x, unsigned y) const { return rows_[x].contains(y); }
  void set(unsigned x, unsigned y, bool value = true);

  // {y : x R y}
  Subset successors(unsigned x) const { return rows_[x]; }
  // {x : x R y}
  Subset predecessors(unsigned y) const;
  // {y : a R y for some a in A}
  Subset image(Subset a) const;
  // {x : x R b for some b in B}
  Subset preimage(Subset b) const;

  // x (R;S) z iff x R y and y S z for some y.
  Relation compose(const Relation& next) const;
  Relation transpose() const;

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;
  bool subset_of(const Relation& other) const;

  std::size_t count() const;
  std::vector<std::pair<unsigned, unsigned>> pairs() const;
  std::string format() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  Universe universe_;
  std::vector<Subset> rows_;
};

}  // namespace closetlab
