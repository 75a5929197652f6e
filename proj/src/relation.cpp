#include "closetlab/relation.hpp"

namespace closetlab {

Relation::Relation(Universe universe)
    : universe_(std::move(universe)), rows_(universe_.size()) {}

Relation Relation::identity(Universe universe) {
  Relation r(std::move(universe));
  for (unsigned x = 0; x < r.size(); ++x) r.set(x, x);
  return r;
}

void Relation::set(unsigned x, unsigned y, bool value) {
  rows_.at(x) = value ? rows_.at(x).with(y) : rows_.at(x).without(y);
}

Subset Relation::predecessors(unsigned y) const {
  Subset out;
  for (unsigned x = 0; x < size(); ++x) {
    if (rows_[x].contains(y)) out = out.with(x);
  }
  return out;
}

Subset Relation::image(Subset a) const {
  Subset out;
  for (unsigned x : a) out |= rows_[x];
  return out;
}

Subset Relation::preimage(Subset b) const {
  Subset out;
  for (unsigned x = 0; x < size(); ++x) {
    if (rows_[x].intersects(b)) out = out.with(x);
  }
  return out;
}

Relation Relation::compose(const Relation& next) const {
  Relation out(universe_);
  for (unsigned x = 0; x < size(); ++x) out.rows_[x] = next.image(rows_[x]);
  return out;
}

Relation Relation::transpose() const {
  Relation out(universe_);
  for (unsigned x = 0; x < size(); ++x) {
    for (unsigned y : rows_[x]) out.set(y, x);
  }
  return out;
}

bool Relation::is_reflexive() const {
  for (unsigned x = 0; x < size(); ++x) {
    if (!holds(x, x)) return false;
  }
  return true;
}

bool Relation::is_transitive() const { return compose(*this).subset_of(*this); }

bool Relation::is_antisymmetric() const {
  for (unsigned x = 0; x < size(); ++x) {
    for (unsigned y : rows_[x]) {
      if (y != x && holds(y, x)) return false;
    }
  }
  return true;
}

bool Relation::subset_of(const Relation& other) const {
  for (unsigned x = 0; x < size(); ++x) {
    if (!rows_[x].subset_of(other.rows_[x])) return false;
  }
  return true;
}

std::size_t Relation::count() const {
  std::size_t n = 0;
  for (auto r : rows_) n += r.size();
  return n;
}

std::vector<std::pair<unsigned, unsigned>> Relation::pairs() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned x = 0; x < size(); ++x) {
    for (unsigned y : rows_[x]) out.emplace_back(x, y);
  }
  return out;
}

std::string Relation::format() const {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : pairs()) {
    if (!first) out += ',';
    out += "(" + universe_.name(x) + "," + universe_.name(y) + ")";
    first = false;
  }
  return out + "}";
}

}  // namespace closetlab
