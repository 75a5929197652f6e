#include "closetlab/order.hpp"

#include "closetlab/errors.hpp"

namespace closetlab {

Qoset::Qoset(Universe universe, Relation leq) : leq_(std::move(leq)) {
  if (!(leq_.universe() == universe)) throw InvalidStructure("order relation over a different universe");
  if (!leq_.is_reflexive()) throw InvalidStructure("order relation is not reflexive");
  if (!leq_.is_transitive()) throw InvalidStructure("order relation is not transitive");
  poset_ = leq_.is_antisymmetric();
  up_.resize(size());
  down_.resize(size());
  for (unsigned x = 0; x < size(); ++x) {
    up_[x] = leq_.successors(x);
    down_[x] = leq_.predecessors(x);
  }
}

Subset Qoset::up(Subset a) const {
  Subset out;
  for (unsigned x : a) out |= up_[x];
  return out;
}

Subset Qoset::down(Subset a) const {
  Subset out;
  for (unsigned x : a) out |= down_[x];
  return out;
}

Subset Qoset::upper_bounds(Subset a) const {
  Subset out = universe().full();
  for (unsigned x : a) out &= up_[x];
  return out;
}

Subset Qoset::lower_bounds(Subset a) const {
  Subset out = universe().full();
  for (unsigned x : a) out &= down_[x];
  return out;
}

std::optional<unsigned> Qoset::supremum(Subset a) const {
  Subset ub = upper_bounds(a);
  for (unsigned u : ub) {
    if (ub.subset_of(up_[u])) return u;
  }
  return std::nullopt;
}

bool Qoset::is_complete_lattice() const {
  if (!poset_) return false;
  if (!supremum(Subset{})) return false;
  for (unsigned x = 0; x < size(); ++x) {
    for (unsigned y = x + 1; y < size(); ++y) {
      if (!supremum(Subset::singleton(x).with(y))) return false;
    }
  }
  return true;
}

Qoset qoset_from_index_pairs(const Universe& u, const std::vector<std::pair<unsigned, unsigned>>& pairs) {
  Relation r = Relation::identity(u);
  for (auto [a, b] : pairs) {
    if (a >= u.size() || b >= u.size()) throw InvalidStructure("order pair index out of range");
    r.set(a, b);
  }
  // Warshall
  for (unsigned k = 0; k < u.size(); ++k) {
    for (unsigned i = 0; i < u.size(); ++i) {
      if (!r.holds(i, k)) continue;
      for (unsigned j : r.successors(k)) r.set(i, j);
    }
  }
  return Qoset(u, std::move(r));
}

Qoset qoset_from_pairs(const Universe& u, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<unsigned, unsigned>> idx;
  idx.reserve(pairs.size());
  for (const auto& [a, b] : pairs) idx.emplace_back(u.index_of(a), u.index_of(b));
  return qoset_from_index_pairs(u, idx);
}

Qoset discrete_order(const Universe& u) { return Qoset(u, Relation::identity(u)); }

std::vector<std::pair<unsigned, unsigned>> generating_pairs(const Qoset& q) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned x = 0; x < q.size(); ++x) {
    for (unsigned y : q.up(x)) {
      if (x == y) continue;
      if (q.is_poset()) {
        // keep only covers: no z strictly between
        Subset between = (q.up(x) & q.down(y)).without(x).without(y);
        if (!between.empty()) continue;
      }
      out.emplace_back(x, y);
    }
  }
  return out;
}

SpaceMap::SpaceMap(Universe source, Universe target, std::vector<unsigned> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size()) throw InvalidStructure("map is not total on its source");
  for (auto y : image_) {
    if (y >= target_.size()) throw InvalidStructure("map image outside its target");
  }
}

SpaceMap SpaceMap::identity(const Universe& u) {
  std::vector<unsigned> img(u.size());
  for (unsigned i = 0; i < u.size(); ++i) img[i] = i;
  return SpaceMap(u, u, std::move(img));
}

SpaceMap SpaceMap::from_names(const Universe& source, const Universe& target,
                              const std::map<std::string, std::string>& assignment) {
  std::vector<unsigned> img(source.size(), 0);
  std::vector<bool> seen(source.size(), false);
  for (const auto& [from, to] : assignment) {
    unsigned i = source.index_of(from);
    img[i] = target.index_of(to);
    seen[i] = true;
  }
  for (unsigned i = 0; i < source.size(); ++i) {
    if (!seen[i]) throw InvalidStructure("map has no image for '" + source.name(i) + "'");
  }
  return SpaceMap(source, target, std::move(img));
}

Subset SpaceMap::image(Subset a) const {
  Subset out;
  for (unsigned x : a) out = out.with(image_[x]);
  return out;
}

Subset SpaceMap::preimage(Subset b) const {
  Subset out;
  for (unsigned x = 0; x < source_.size(); ++x) {
    if (b.contains(image_[x])) out = out.with(x);
  }
  return out;
}

bool SpaceMap::is_surjective() const { return image(source_.full()) == target_.full(); }

SpaceMap SpaceMap::then(const SpaceMap& next) const {
  if (!(target_ == next.source_)) throw InvalidStructure("maps do not compose");
  std::vector<unsigned> img(source_.size());
  for (unsigned x = 0; x < source_.size(); ++x) img[x] = next(image_[x]);
  return SpaceMap(source_, next.target_, std::move(img));
}

std::optional<std::pair<unsigned, unsigned>> SpaceMap::monotonicity_violation(const Qoset& from,
                                                                              const Qoset& to) const {
  for (unsigned x = 0; x < source_.size(); ++x) {
    for (unsigned y : from.up(x)) {
      if (!to.leq(image_[x], image_[y])) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

}  // namespace closetlab
