#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "closetlab/relation.hpp"
#include "closetlab/subset.hpp"

namespace closetlab {

// A quasiordered set: reflexive, transitive relation on a universe.
class Qoset {
 public:
  // Throws InvalidStructure if leq is not reflexive and transitive.
  Qoset(Universe universe, Relation leq);

  const Universe& universe() const { return leq_.universe(); }
  const Relation& relation() const { return leq_; }
  unsigned size() const { return leq_.size(); }

  bool leq(unsigned x, unsigned y) const { return leq_.holds(x, y); }
  bool is_poset() const { return poset_; }

  Subset up(unsigned x) const { return up_[x]; }
  Subset down(unsigned x) const { return down_[x]; }
  Subset up(Subset a) const;
  Subset down(Subset a) const;
  // A^ (all upper bounds) and A_ (all lower bounds); the bounds of the empty
  // set are the whole universe.
  Subset upper_bounds(Subset a) const;
  Subset lower_bounds(Subset a) const;
  bool is_lower(Subset a) const { return down(a) == a; }
  bool is_upper(Subset a) const { return up(a) == a; }

  // Least upper bound of A, when one exists (requires a poset for uniqueness;
  // on a qoset returns the first least element of the upper bounds).
  std::optional<unsigned> supremum(Subset a) const;
  // Every subset has a supremum.
  bool is_complete_lattice() const;

  friend bool operator==(const Qoset& a, const Qoset& b) { return a.leq_ == b.leq_; }

 private:
  Relation leq_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  bool poset_ = false;
};

// Reflexive-transitive closure of the given pairs (a, b) meaning a <= b.
Qoset qoset_from_pairs(const Universe& u, const std::vector<std::pair<std::string, std::string>>& pairs);
Qoset qoset_from_index_pairs(const Universe& u, const std::vector<std::pair<unsigned, unsigned>>& pairs);
Qoset discrete_order(const Universe& u);

// Pairs x < y of the covering relation on a poset, or all non-reflexive
// pairs on a qoset; enough to rebuild the order by closure.
std::vector<std::pair<unsigned, unsigned>> generating_pairs(const Qoset& q);

// A total map between two universes.
class SpaceMap {
 public:
  SpaceMap(Universe source, Universe target, std::vector<unsigned> image);
  static SpaceMap identity(const Universe& u);
  static SpaceMap from_names(const Universe& source, const Universe& target,
                             const std::map<std::string, std::string>& assignment);

  const Universe& source() const { return source_; }
  const Universe& target() const { return target_; }
  const std::vector<unsigned>& images() const { return image_; }

  unsigned operator()(unsigned x) const { return image_[x]; }
  Subset image(Subset a) const;
  Subset preimage(Subset b) const;
  bool is_surjective() const;

  // self then next
  SpaceMap then(const SpaceMap& next) const;

  // First pair x <= y with f(x) not <= f(y).
  std::optional<std::pair<unsigned, unsigned>> monotonicity_violation(const Qoset& from,
                                                                      const Qoset& to) const;

  friend bool operator==(const SpaceMap&, const SpaceMap&) = default;

 private:
  Universe source_;
  Universe target_;
  std::vector<unsigned> image_;
};

}  // namespace closetlab
