#include "closetlab/topology.hpp"

#include <vector>

#include "closetlab/core_ops.hpp"
#include "closetlab/inner_regular.hpp"
#include "closetlab/waybelow.hpp"

namespace closetlab {

namespace {

// Open sets: empty and full must be open and meets of opens open.
bool direct_test(const SetOperator& op, TopologyResult& out) {
  const auto& u = op.universe();
  if (!op(Subset{}).empty()) {
    out.reason = "c(empty) = " + u.format(op(Subset{})) + ", so the full set is not open";
    return false;
  }
  auto opens = open_family(op);
  if (u.size() <= kLiteralPairCap) {
    const auto& m = opens.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!opens.contains(m[i] & m[j])) {
          out.reason = "meet of open " + u.format(m[i]) + " and " + u.format(m[j]) + " is not open";
          out.witness = std::make_pair(m[i], m[j]);
          return false;
        }
      }
    }
    return true;
  }
  // Every closed G is the union of the closures of its points, so unions of
  // closed sets stay closed iff F u cl({x}) is closed for closed F.
  auto bar = associated_closure(op);
  auto closed = closed_family(op);
  for (auto f : closed) {
    for (unsigned x = 0; x < u.size(); ++x) {
      Subset g = bar(Subset::singleton(x));
      if (!closed.contains(f | g)) {
        out.reason = "union of closed " + u.format(f) + " and " + u.format(g) + " is not closed";
        out.witness = std::make_pair(u.complement(f), u.complement(g));
        return false;
      }
    }
  }
  return true;
}

// cl(empty) = empty and cl(A u B) inside cl(A) u cl(B).
bool kuratowski_test(const SetOperator& op, TopologyResult& out) {
  const auto& u = op.universe();
  auto bar = associated_closure(op);
  if (!bar(Subset{}).empty()) {
    if (out.reason.empty()) out.reason = "closure of the empty set is " + u.format(bar(Subset{}));
    return false;
  }
  auto record = [&](Subset a, Subset b) {
    if (out.reason.empty()) {
      out.reason = "closure of " + u.format(a | b) + " exceeds the union of the closures of " + u.format(a) +
                   " and " + u.format(b);
      out.witness = std::make_pair(a, b);
    }
  };
  if (u.size() <= kLiteralPairCap) {
    for (std::size_t i = 0; i < u.subset_count(); ++i) {
      Subset a(static_cast<Subset::Bits>(i));
      for (std::size_t j = i; j < u.subset_count(); ++j) {
        Subset b(static_cast<Subset::Bits>(j));
        if (!bar(a | b).subset_of(bar(a) | bar(b))) {
          record(a, b);
          return false;
        }
      }
    }
    return true;
  }
  // On a finite set binary additivity is additivity over points.
  for (std::size_t i = 1; i < u.subset_count(); ++i) {
    Subset a(static_cast<Subset::Bits>(i));
    Subset points;
    for (unsigned x : a) points |= bar(Subset::singleton(x));
    if (bar(a) != points) {
      unsigned x = *a.begin();
      record(Subset::singleton(x), a.without(x));
      return false;
    }
  }
  return true;
}

}  // namespace

TopologyResult is_topological(const SetOperator& op) {
  TopologyResult out;
  closed_family(op);  // validates preclosure
  out.topological = direct_test(op, out);
  out.kuratowski = kuratowski_test(op, out);
  return out;
}

SubsetFamily irreducible_subsets(const SetOperator& c) {
  const auto& u = c.universe();
  auto bar = associated_closure(c);
  auto closed = closed_family(c);
  std::vector<Subset> out;
  for (std::size_t m = 1; m < u.subset_count(); ++m) {
    Subset r(static_cast<Subset::Bits>(m));
    // R splits iff some closed F misses part of R while the least closed set
    // holding the rest of R also misses part of R.
    bool irreducible = true;
    for (auto f : closed) {
      if (r.subset_of(f)) continue;
      if (!r.subset_of(bar(r - f))) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) out.push_back(r);
  }
  return SubsetFamily(u, std::move(out));
}

bool is_generated_by_irreducibles(const EnrichedCloset& ec) {
  return is_generated_by(ec, irreducible_subsets(ec.c())).generated;
}

Report prop_topological(const EnrichedCloset& ec) {
  Report r("prop_topological");
  const auto& u = ec.universe();
  bool bracket_top = is_topological(ec.bracket()).topological;
  bool c_top = is_topological(ec.c()).topological;
  auto irreducibles = irreducible_subsets(ec.c());
  bool generated = is_generated_by(ec, irreducibles).generated;
  auto wb = way_below(ec);
  bool continuous = is_continuous(ec, wb).continuous;
  r.set("bracket_topological", bracket_top).set("c_topological", c_top);
  r.set("generated_by_irreducibles", generated).set("continuous", continuous);
  bool applied = false;
  if (bracket_top && generated) {
    applied = true;
    if (!c_top) r.fail("bracket topological and c generated by irreducibles, yet c is not topological");
  }
  if (continuous && c_top) {
    applied = true;
    if (!generated) r.fail("continuous topological c is not generated by irreducibles");
    for (unsigned x = 0; x < u.size(); ++x) {
      Subset d = dd(wb, Subset::singleton(x));
      if (!irreducibles.contains(d)) {
        r.fail("dd(" + u.name(x) + ")=" + u.format(d) + " is not irreducible");
        break;
      }
    }
  }
  if (!applied) r.unmet("neither implication has its hypotheses");
  return r;
}

Report topology_agreement(const SetOperator& op) {
  Report r("topology_agreement");
  auto t = is_topological(op);
  r.set("direct", t.topological).set("kuratowski", t.kuratowski);
  if (t.topological != t.kuratowski) r.fail("direct and Kuratowski topology tests disagree");
  return r;
}

}  // namespace closetlab
