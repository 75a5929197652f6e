#include "closetlab/interpolation.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "closetlab/core_ops.hpp"
#include "closetlab/errors.hpp"
#include "closetlab/waybelow.hpp"

namespace closetlab {

namespace {

std::string pair_text(const Universe& u, unsigned x, unsigned y) {
  return "(" + u.name(x) + "," + u.name(y) + ")";
}

bool all_lower_sets(const Qoset& order, const SubsetFamily& fam) {
  std::size_t lower = 0;
  const auto& u = order.universe();
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset s(static_cast<Subset::Bits>(m));
    if (order.is_lower(s)) {
      if (!fam.contains(s)) return false;
      ++lower;
    }
  }
  return lower == fam.size();
}

// Shared precondition of the drivers that need union-completeness of the
// weakly-closed family. Returns false (and marks the report) when unmet.
bool weakly_closed_union_complete(const EnrichedCloset& ec, std::uint64_t cap, Report& r) {
  auto res = union_complete(ec.order(), closed_family(ec.bracket()), cap);
  if (res.status == UnionStatus::complete) return true;
  if (res.status == UnionStatus::cap_exceeded) {
    r.unmet("union-completeness of the weakly-closed family: cap-exceeded after " + std::to_string(res.work) +
            " steps");
  } else {
    const auto& u = ec.universe();
    r.unmet("weakly-closed family is not union-complete: index " + u.format(*res.index) + " yields " +
            u.format(*res.union_set));
  }
  return false;
}

// Generic finite lattice on indices 0..m-1.
struct LatticeView {
  std::size_t m;
  std::function<bool(std::size_t, std::size_t)> leq;
  // least upper bound of the marked indices
  std::function<std::size_t(const std::vector<bool>&)> sup;
};

// below[x] = marks of y with y <| x
std::vector<std::vector<bool>> raney_marks(const LatticeView& l) {
  std::vector<std::vector<bool>> below(l.m, std::vector<bool>(l.m, false));
  for (std::size_t y = 0; y < l.m; ++y) {
    std::vector<bool> outside(l.m);
    for (std::size_t z = 0; z < l.m; ++z) outside[z] = !l.leq(y, z);
    std::size_t j = l.sup(outside);
    for (std::size_t x = 0; x < l.m; ++x) {
      if (!l.leq(x, j)) below[x][y] = true;
    }
  }
  return below;
}

bool raney_criterion(const LatticeView& l) {
  auto below = raney_marks(l);
  for (std::size_t x = 0; x < l.m; ++x) {
    if (l.sup(below[x]) != x) return false;
  }
  return true;
}

LatticeView view_of(const Qoset& q) {
  if (!q.is_complete_lattice()) throw InvalidStructure("order is not a complete lattice");
  LatticeView l;
  l.m = q.size();
  l.leq = [q](std::size_t a, std::size_t b) { return q.leq(static_cast<unsigned>(a), static_cast<unsigned>(b)); };
  l.sup = [q](const std::vector<bool>& marks) {
    Subset s;
    for (std::size_t i = 0; i < marks.size(); ++i) {
      if (marks[i]) s = s.with(static_cast<unsigned>(i));
    }
    return static_cast<std::size_t>(*q.supremum(s));
  };
  return l;
}

}  // namespace

InterpolationResult is_interpolating(const Relation& wb) {
  InterpolationResult r;
  for (unsigned x = 0; x < wb.size(); ++x) {
    for (unsigned z : wb.successors(x)) {
      if (!wb.successors(x).intersects(wb.predecessors(z))) {
        r.interpolating = false;
        r.witness = std::make_pair(x, z);
        return r;
      }
    }
  }
  return r;
}

InterpolationResult is_interpolating(const EnrichedCloset& ec) { return is_interpolating(way_below(ec)); }

Report interpolation_agreement(const EnrichedCloset& ec) {
  Report r("interpolation_agreement");
  auto wb = way_below(ec);
  bool pairwise = is_interpolating(wb).interpolating;
  bool lower = true;
  bool upper = true;
  for (unsigned x = 0; x < ec.size(); ++x) {
    Subset s = Subset::singleton(x);
    lower = lower && dd(wb, s) == dd(wb, dd(wb, s));
    upper = upper && uu(wb, s) == uu(wb, uu(wb, s));
  }
  r.set("pairwise", pairwise).set("dd_idempotent", lower).set("uu_idempotent", upper);
  if (pairwise != lower || pairwise != upper) r.fail("interpolation tests disagree");
  return r;
}

bool is_strongly_continuous(const EnrichedCloset& ec) {
  auto wb = way_below(ec);
  return is_continuous(ec, wb).continuous && is_interpolating(wb).interpolating;
}

Report prop_interpolation_char(const EnrichedCloset& ec) {
  Report r("prop_interpolation_char");
  const auto& u = ec.universe();
  auto wb = way_below(ec);
  bool interpolating = is_interpolating(wb).interpolating;
  std::vector<Subset> way_upper;
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset g(static_cast<Subset::Bits>(m));
    if (uu(wb, g) == g) way_upper.push_back(g);
  }
  bool backward = true;
  bool equivalence = true;
  for (unsigned x = 0; x < u.size(); ++x) {
    // way-upper sets are closed under unions, so the union of those inside
    // up(x) is the largest one
    Subset reach;
    for (auto g : way_upper) {
      if (g.subset_of(ec.order().up(x))) reach |= g;
    }
    for (unsigned y = 0; y < u.size(); ++y) {
      bool rhs = reach.contains(y);
      if (rhs && !wb.holds(x, y) && backward) {
        backward = false;
        r.fail("way-upper set inside up(x) reaches y without x << y at " + pair_text(u, x, y));
      }
      if (interpolating && rhs != wb.holds(x, y) && equivalence) {
        equivalence = false;
        r.fail("characterization fails at " + pair_text(u, x, y));
      }
    }
  }
  r.set("interpolating", interpolating);
  r.set("way_upper_implies_below", backward);
  r.set("equivalence", interpolating ? std::optional<bool>(equivalence) : std::nullopt);
  if (!interpolating) r.add_note("equivalence not asserted: no interpolation");
  return r;
}

bool relatively_closed(const EnrichedCloset& ec, Subset d) {
  Subset cd = ec.c()(d);
  return ec.c()(cd) == cd;
}

SubsetFamily relatively_closed_family(const EnrichedCloset& ec) {
  const auto& u = ec.universe();
  std::vector<Subset> members;
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset d(static_cast<Subset::Bits>(m));
    if (relatively_closed(ec, d)) members.push_back(d);
  }
  return SubsetFamily(u, std::move(members));
}

UnionCompleteResult union_complete(const SetOperator& bracket, const SubsetFamily& fam, std::uint64_t cap) {
  return union_complete(specialization(bracket), fam, cap);
}

UnionCompleteResult union_complete(const Qoset& order, const SubsetFamily& fam, std::uint64_t cap) {
  UnionCompleteResult res;
  if (all_lower_sets(order, fam)) return res;
  const auto& members = fam.members();
  for (auto d : fam) {
    std::vector<unsigned> elems(d.begin(), d.end());
    std::vector<Subset> chosen(elems.size());
    bool stop = false;
    std::function<void(std::size_t, Subset)> walk = [&](std::size_t i, Subset acc) {
      if (stop) return;
      if (++res.work > cap) {
        res.status = UnionStatus::cap_exceeded;
        stop = true;
        return;
      }
      if (i == elems.size()) {
        if (!fam.contains(acc)) {
          res.status = UnionStatus::incomplete;
          res.index = d;
          res.union_set = acc;
          stop = true;
        }
        return;
      }
      unsigned x = elems[i];
      for (auto f : members) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          unsigned y = elems[j];
          if (order.leq(y, x) && !chosen[j].subset_of(f)) ok = false;
          if (order.leq(x, y) && !f.subset_of(chosen[j])) ok = false;
        }
        if (!ok) continue;
        chosen[i] = f;
        walk(i + 1, acc | f);
        if (stop) return;
      }
    };
    walk(0, Subset{});
    if (stop) return res;
  }
  return res;
}

Report prop_way_below_images(const EnrichedCloset& ec) {
  Report r("prop_way_below_images");
  auto wb = way_below(ec);
  if (!is_continuous(ec, wb).continuous) {
    r.unmet("closet is not continuous");
    return r;
  }
  const auto& u = ec.universe();
  bool interpolating = is_interpolating(wb).interpolating;
  bool images_agree = true;
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    if (dd(wb, ec.c()(a)) != dd(wb, ec.bracket()(a))) {
      images_agree = false;
      r.add_note("first A with dd(c(A)) != dd([A]): " + u.format(a));
      break;
    }
  }
  r.set("interpolating", interpolating).set("images_agree", images_agree);
  if (interpolating != images_agree) r.fail("interpolation and dd(c(.)) = dd([.]) disagree");
  return r;
}

Report theorem_interpolation_open(const EnrichedCloset& ec) {
  Report r("theorem_interpolation_open");
  const auto& u = ec.universe();
  auto wb = way_below(ec);
  if (!is_continuous(ec, wb).continuous) {
    r.unmet("closet is not continuous");
    return r;
  }
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset g(static_cast<Subset::Bits>(m));
    Subset rest = u.complement(g);
    if (uu(wb, g) == g && ec.bracket()(rest) != rest) {
      r.unmet("way-upper " + u.format(g) + " is not weakly-open");
      return r;
    }
  }
  auto is_open = [&](Subset g) {
    Subset rest = u.complement(g);
    return ec.c()(rest) == rest;
  };
  bool interpolating = is_interpolating(wb).interpolating;
  bool sets_open = true;
  for (std::size_t m = 0; m < u.subset_count() && sets_open; ++m) {
    sets_open = is_open(uu(wb, Subset(static_cast<Subset::Bits>(m))));
  }
  bool points_open = true;
  for (unsigned x = 0; x < u.size() && points_open; ++x) points_open = is_open(uu(wb, Subset::singleton(x)));
  r.set("interpolating", interpolating).set("uu_sets_open", sets_open).set("uu_points_open", points_open);
  if (interpolating != sets_open || interpolating != points_open) {
    r.fail("interpolation and openness of way-up sets disagree");
  }
  return r;
}

Report theorem_interpolation_idempotent(const EnrichedCloset& ec, std::uint64_t cap) {
  Report r("theorem_interpolation_idempotent");
  auto wb = way_below(ec);
  if (!is_continuous(ec, wb).continuous) {
    r.unmet("closet is not continuous");
    return r;
  }
  if (!weakly_closed_union_complete(ec, cap, r)) return r;
  bool interpolating = is_interpolating(wb).interpolating;
  bool idempotent = ec.c().classification().idempotent;
  r.set("interpolating", interpolating).set("idempotent", idempotent);
  if (interpolating != idempotent) r.fail("interpolation and idempotency of c disagree");
  return r;
}

Report corollary_strong_continuity(const EnrichedCloset& ec, std::uint64_t cap) {
  Report r("corollary_strong_continuity");
  if (!weakly_closed_union_complete(ec, cap, r)) return r;
  bool strong = is_strongly_continuous(ec);
  bool idempotent = ec.c().classification().idempotent;
  // the meet-preservation condition is cond4 of the continuity theorem; the
  // Galois form is not needed here
  auto equiv = theorem_continuity_equiv(ec, 0);
  bool meets = *equiv.get("cond4");
  r.set("strongly_continuous", strong).set("idempotent", idempotent).set("preserves_weak_meets", meets);
  if (strong != (idempotent && meets)) r.fail("strong continuity and its characterization disagree");
  return r;
}

Report prop_open_way_upper(const EnrichedCloset& ec, std::uint64_t cap) {
  Report r("prop_open_way_upper");
  if (!ec.c().classification().idempotent) {
    r.unmet("c is not a closure operator");
    return r;
  }
  if (!weakly_closed_union_complete(ec, cap, r)) return r;
  const auto& u = ec.universe();
  auto wb = way_below(ec);
  bool continuous = is_continuous(ec, wb).continuous;
  bool opens_way_upper = true;
  for (auto g : open_family(ec.c())) {
    if (uu(wb, g) != g) {
      opens_way_upper = false;
      r.add_note("open set that is not way-upper: " + u.format(g));
      break;
    }
  }
  r.set("continuous", continuous).set("opens_way_upper", opens_way_upper);
  if (continuous != opens_way_upper) r.fail("continuity and way-upper opens disagree");
  return r;
}

Relation raney_relation(const Qoset& lattice) {
  auto marks = raney_marks(view_of(lattice));
  Relation out(lattice.universe());
  for (unsigned x = 0; x < lattice.size(); ++x) {
    for (unsigned y = 0; y < lattice.size(); ++y) {
      if (marks[x][y]) out.set(y, x);
    }
  }
  return out;
}

bool completely_distributive(const Qoset& lattice) { return raney_criterion(view_of(lattice)); }

bool completely_distributive(const SubsetFamily& lattice) {
  if (!moore_check(lattice).holds) throw InvalidStructure("family is not closed under intersections");
  const auto& members = lattice.members();
  const Subset top = lattice.universe().full();
  LatticeView l;
  l.m = members.size();
  l.leq = [&members](std::size_t a, std::size_t b) { return members[a].subset_of(members[b]); };
  l.sup = [&](const std::vector<bool>& marks) {
    Subset cover;
    for (std::size_t i = 0; i < marks.size(); ++i) {
      if (marks[i]) cover |= members[i];
    }
    Subset meet = top;
    for (auto f : members) {
      if (cover.subset_of(f)) meet &= f;
    }
    return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), meet) - members.begin());
  };
  return raney_criterion(l);
}

Report corollary_complete_distributivity(const EnrichedCloset& ec, std::size_t lattice_cap) {
  Report r("corollary_complete_distributivity");
  if (!is_strongly_continuous(ec)) {
    r.unmet("closet is not strongly continuous");
    return r;
  }
  auto closed = closed_family(ec.c());
  if (closed.size() > lattice_cap) {
    r.set("closed_family_cd", std::nullopt);
    r.add_note("skipped: " + std::to_string(closed.size()) + " closed sets exceeds lattice cap");
    return r;
  }
  bool cd = completely_distributive(closed);
  r.set("closed_family_cd", cd);
  if (!cd) r.fail("closed family of a strongly continuous closet is not completely distributive");
  return r;
}

Report interpolation_lemma(const EnrichedCloset& ec) {
  Report r("interpolation_lemma");
  auto wb = way_below(ec);
  if (!is_continuous(ec, wb).continuous) {
    r.unmet("closet is not continuous");
    return r;
  }
  const auto& u = ec.universe();
  bool ok = true;
  std::size_t applicable = 0;
  for (auto [x, y] : wb.pairs()) {
    Subset a = dd(wb, dd(wb, Subset::singleton(y)));
    if (ec.bracket()(a) != a || !relatively_closed(ec, a)) continue;
    ++applicable;
    if (!wb.successors(x).intersects(wb.predecessors(y))) {
      ok = false;
      r.fail("no interpolant for " + pair_text(u, x, y));
      break;
    }
  }
  r.set("interpolants_found", ok);
  r.add_note(std::to_string(applicable) + " pairs met the hypothesis");
  return r;
}

}  // namespace closetlab
