#include "closetlab/core_ops.hpp"

#include "closetlab/errors.hpp"

namespace closetlab {

namespace {

void require_preclosure(const SetOperator& op, const char* what) {
  const auto& cls = op.classification();
  if (cls.preclosure()) return;
  const auto& u = op.universe();
  std::string why = std::string(what) + " requires a preclosure operator; '" + op.kind() + "' is ";
  if (!cls.extensive) {
    why += "not extensive at " + u.format(*cls.not_extensive_at);
  } else {
    why += "not monotone at " + u.format(cls.not_monotone_at->first) + " <= " +
           u.format(cls.not_monotone_at->second);
  }
  throw InvalidStructure(why);
}

}  // namespace

SubsetFamily closed_family(const SetOperator& op) {
  require_preclosure(op, "closed_family");
  SubsetFamily out(op.universe());
  std::vector<Subset> members;
  for (std::size_t m = 0; m < op.universe().subset_count(); ++m) {
    Subset f(static_cast<Subset::Bits>(m));
    if (op(f) == f) members.push_back(f);
  }
  return SubsetFamily(op.universe(), std::move(members));
}

SubsetFamily open_family(const SetOperator& op) {
  std::vector<Subset> members;
  const auto& u = op.universe();
  for (auto f : closed_family(op)) members.push_back(u.complement(f));
  return SubsetFamily(u, std::move(members));
}

SetOperator associated_closure(const SetOperator& op) {
  require_preclosure(op, "associated_closure");
  // Iterating an extensive monotone map from A climbs to its least fixed
  // point above A, which is the least closed superset.
  return SetOperator::from_rule(op.universe(), "closure_of:" + op.kind(), [op](Subset a) {
    Subset cur = a;
    for (;;) {
      Subset next = op(cur);
      if (next == cur) return cur;
      cur = next;
    }
  });
}

MooreCheck moore_check(const SubsetFamily& family) {
  MooreCheck out;
  if (!family.contains(family.universe().full())) {
    out.holds = false;
    return out;
  }
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!family.contains(m[i] & m[j])) {
        out.holds = false;
        out.witness = {m[i], m[j]};
        return out;
      }
    }
  }
  return out;
}

std::vector<Subset> union_over_subsets(const SetOperator& f) {
  auto t = f.table();
  const unsigned n = f.universe().size();
  for (unsigned i = 0; i < n; ++i) {
    const Subset::Bits bit = Subset::Bits{1} << i;
    for (std::size_t m = 0; m < t.size(); ++m) {
      if (m & bit) t[m] |= t[m ^ bit];
    }
  }
  return t;
}

Report lemma_closed_open(const SetOperator& op) {
  Report r("lemma_closed_open");
  if (!op.is_preclosure()) {
    r.unmet("operator is not a preclosure operator");
    return r;
  }
  const auto& u = op.universe();
  const auto below = union_over_subsets(op);
  bool closed_ok = true;
  bool open_ok = true;
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset s(static_cast<Subset::Bits>(m));
    bool closed = op(s) == s;
    bool closed_by_lemma = below[m].subset_of(s);
    if (closed != closed_by_lemma && closed_ok) {
      closed_ok = false;
      r.fail("closed characterization disagrees at " + u.format(s));
    }
    // s read as an open candidate G: open iff its complement is closed.
    Subset rest = u.complement(s);
    bool open = op(rest) == rest;
    bool open_by_lemma = !below[rest.bits()].intersects(s);
    if (open != open_by_lemma && open_ok) {
      open_ok = false;
      r.fail("open characterization disagrees at " + u.format(s));
    }
  }
  r.set("closed_characterization", closed_ok);
  r.set("open_characterization", open_ok);
  return r;
}

}  // namespace closetlab
