#include "closetlab/constructors.hpp"

#include <string>

#include "closetlab/closet.hpp"
#include "closetlab/errors.hpp"

namespace closetlab {

namespace {

void require_monotone(const SpaceMap& m, const Qoset& from, const Qoset& to, const std::string& what) {
  if (auto bad = m.monotonicity_violation(from, to)) {
    const auto& s = from.universe();
    throw InvalidStructure(what + " is not monotone: " + s.name(bad->first) + " <= " + s.name(bad->second) +
                           " but " + to.universe().name(m(bad->first)) + " is not <= " +
                           to.universe().name(m(bad->second)));
  }
}

void require_same(const Universe& a, const Universe& b, const std::string& what) {
  if (!(a == b)) throw InvalidStructure(what + ": universe mismatch");
}

// t[A] := union of t[B] over B inside A
void or_over_subsets(std::vector<Subset>& t, unsigned n) {
  for (unsigned i = 0; i < n; ++i) {
    const Subset::Bits bit = Subset::Bits{1} << i;
    for (std::size_t m = 0; m < t.size(); ++m) {
      if (m & bit) t[m] |= t[m ^ bit];
    }
  }
}

}  // namespace

SetOperator alexandrov(const Qoset& q) {
  return SetOperator::from_rule(q.universe(), "alexandrov", [q](Subset a) { return q.down(a); });
}

SetOperator dedekind_macneille(const Qoset& q) {
  return SetOperator::from_rule(q.universe(), "dedekind_macneille",
                                [q](Subset a) { return q.lower_bounds(q.upper_bounds(a)); });
}

SetOperator directed_sup(const Qoset& q) {
  if (!q.is_poset()) throw InvalidStructure("directed_sup needs a partial order");
  const auto& u = q.universe();
  const unsigned n = u.size();
  std::vector<Subset> t(u.subset_count());
  for (std::size_t m = 1; m < t.size(); ++m) {
    Subset d(static_cast<Subset::Bits>(m));
    bool directed = true;
    for (unsigned x : d) {
      for (unsigned y : d) {
        if (!(q.up(x) & q.up(y)).intersects(d)) {
          directed = false;
          break;
        }
      }
      if (!directed) break;
    }
    if (directed && q.supremum(d)) t[m] = q.lower_bounds(q.upper_bounds(d));
  }
  or_over_subsets(t, n);
  return SetOperator::from_rule(u, "directed_sup", [q, t = std::move(t)](Subset a) { return t[q.down(a).bits()]; });
}

SetOperator inflationary(const Qoset& q, const SpaceMap& m) {
  require_same(m.source(), q.universe(), "inflationary map");
  require_same(m.target(), q.universe(), "inflationary map");
  require_monotone(m, q, q, "inflationary map");
  for (unsigned x = 0; x < q.size(); ++x) {
    if (!q.leq(x, m(x))) {
      throw InvalidStructure("inflationary map is not inflationary at " + q.universe().name(x));
    }
  }
  return SetOperator::from_rule(q.universe(), "inflationary",
                                [q, m](Subset a) { return q.down(m.image(q.down(a))); });
}

SetOperator novak(const Qoset& p, const Qoset& q, const SpaceMap& l, const SpaceMap& r, bool strict) {
  require_same(l.source(), q.universe(), "novak l");
  require_same(l.target(), p.universe(), "novak l");
  require_same(r.source(), p.universe(), "novak r");
  require_same(r.target(), q.universe(), "novak r");
  require_monotone(l, q, p, "novak l");
  require_monotone(r, p, q, "novak r");
  const auto& pu = p.universe();
  for (unsigned x = 0; x < p.size(); ++x) {
    if (!p.leq(x, l(r(x)))) throw InvalidStructure("novak: " + pu.name(x) + " is not <= l(r(" + pu.name(x) + "))");
  }
  if (strict) {
    for (unsigned x = 0; x < p.size(); ++x) {
      for (unsigned y = 0; y < p.size(); ++y) {
        if (q.leq(r(x), r(y)) && !p.leq(x, y)) {
          throw InvalidStructure("novak strict: r(" + pu.name(x) + ") <= r(" + pu.name(y) + ") but " + pu.name(x) +
                                 " is not <= " + pu.name(y));
        }
      }
    }
    bool deflates = true;
    for (unsigned y = 0; y < q.size(); ++y) {
      if (!q.leq(r(l(y)), y)) deflates = false;
    }
    if (!deflates && !r.is_surjective()) {
      throw InvalidStructure("novak strict: r(l(y)) <= y fails and r is not onto");
    }
  }
  return SetOperator::from_rule(pu, "novak", [p, q, l, r](Subset a) { return p.down(l.image(q.down(r.image(a)))); });
}

SetOperator selfmap_family(const Qoset& q, const std::vector<SpaceMap>& phis) {
  if (phis.empty()) throw InvalidStructure("selfmap_family needs at least one map");
  bool some_deflationary = false;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    const auto& phi = phis[i];
    require_same(phi.source(), q.universe(), "selfmap_family map");
    require_same(phi.target(), q.universe(), "selfmap_family map");
    require_monotone(phi, q, q, "selfmap_family map #" + std::to_string(i));
    bool deflationary = true;
    for (unsigned x = 0; x < q.size(); ++x) {
      if (!q.leq(phi(x), x)) deflationary = false;
    }
    some_deflationary = some_deflationary || deflationary;
  }
  if (!some_deflationary) throw InvalidStructure("selfmap_family: no map is deflationary");
  return SetOperator::from_rule(q.universe(), "selfmap_family", [q, phis](Subset a) {
    Subset lower = q.down(a);
    Subset out;
    for (const auto& phi : phis) out |= phi.preimage(lower);
    return out;
  });
}

SetOperator compact_set(const Qoset& q, Subset k) {
  if (k.empty()) throw InvalidStructure("compact_set needs a nonempty K");
  if (!q.universe().contains(k)) throw InvalidStructure("compact_set: K outside the universe");
  const Subset soft = q.universe().complement(k);
  return SetOperator::from_rule(q.universe(), "compact_set", [q, soft](Subset a) {
    Subset allowed = q.down(a) | soft;
    Subset out;
    for (unsigned x = 0; x < q.size(); ++x) {
      if (q.down(x).subset_of(allowed)) out = out.with(x);
    }
    return out;
  });
}

SetOperator upper_topology(const Qoset& q) {
  const auto& u = q.universe();
  const unsigned n = u.size();
  // Finite unions of principal ideals are the sets down(S); the closure of A
  // is the meet of those containing A, computed as an AND over supersets.
  std::vector<Subset> t(u.subset_count(), u.full());
  for (std::size_t m = 0; m < t.size(); ++m) {
    Subset basic = q.down(Subset(static_cast<Subset::Bits>(m)));
    t[basic.bits()] = basic;
  }
  for (unsigned i = 0; i < n; ++i) {
    const Subset::Bits bit = Subset::Bits{1} << i;
    for (std::size_t m = 0; m < t.size(); ++m) {
      if (!(m & bit)) t[m] &= t[m | bit];
    }
  }
  return SetOperator::from_table(u, std::move(t), "upper_topology");
}

SetOperator generated_operator(const SetOperator& bracket, const SetOperator& c, const SubsetFamily& fam) {
  const auto& u = bracket.universe();
  require_same(c.universe(), u, "generated_operator");
  require_same(fam.universe(), u, "generated_operator family");
  std::vector<Subset> t(u.subset_count());
  for (auto d : fam) t[d.bits()] = c(d);
  or_over_subsets(t, u.size());
  auto op = SetOperator::from_rule(u, "generated:" + c.kind(), [bracket, t = std::move(t)](Subset a) {
    return t[bracket(a).bits()];
  });
  // The result is monotone, so extensivity reduces to singletons.
  for (unsigned x = 0; x < u.size(); ++x) {
    if (!op(Subset::singleton(x)).contains(x)) {
      throw InvalidStructure("generated operator is not extensive: no family member inside [{" + u.name(x) +
                             "}] reaches " + u.name(x));
    }
  }
  return op;
}

SetOperator generated_operator(const EnrichedCloset& ec, const SubsetFamily& fam) {
  return generated_operator(ec.bracket(), ec.c(), fam);
}

}  // namespace closetlab
