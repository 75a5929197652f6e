#include "closetlab/maps.hpp"

#include <vector>

#include "closetlab/core_ops.hpp"
#include "closetlab/errors.hpp"
#include "closetlab/inner_regular.hpp"
#include "closetlab/waybelow.hpp"

namespace closetlab {

namespace {

void require_between(const SpaceMap& f, const Universe& from, const Universe& to) {
  if (!(f.source() == from) || !(f.target() == to)) throw InvalidStructure("map does not match the closets");
}

// D in fam with f(c(D)) not inside c'(f(D))
std::optional<Subset> family_condition(const SpaceMap& f, const SetOperator& c, const SetOperator& c2,
                                       const SubsetFamily& fam) {
  for (auto d : fam) {
    if (!f.image(c(d)).subset_of(c2(f.image(d)))) return d;
  }
  return std::nullopt;
}

bool relatively_closed_in(const SetOperator& c, Subset d) {
  Subset cd = c(d);
  return c(cd) == cd;
}

}  // namespace

MapCheck is_strictly_continuous(const SpaceMap& f, const SetOperator& c, const SetOperator& c2) {
  require_between(f, c.universe(), c2.universe());
  MapCheck r;
  for (std::size_t m = 0; m < c.universe().subset_count(); ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    if (!f.image(c(a)).subset_of(c2(f.image(a)))) {
      r.holds = false;
      r.witness = a;
      break;
    }
  }
  return r;
}

MapCheck is_strictly_continuous(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2) {
  return is_strictly_continuous(f, e.c(), e2.c());
}

MapCheck is_closure_continuous(const SpaceMap& f, const SetOperator& c, const SetOperator& c2) {
  require_between(f, c.universe(), c2.universe());
  MapCheck r;
  for (auto closed : closed_family(c2)) {
    Subset back = f.preimage(closed);
    if (c(back) != back) {
      r.holds = false;
      r.witness = closed;
      break;
    }
  }
  return r;
}

MapCheck is_closure_continuous(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2) {
  return is_closure_continuous(f, e.c(), e2.c());
}

MapCheck is_bracket_continuous(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2) {
  return is_strictly_continuous(f, e.bracket(), e2.bracket());
}

bool preserves_way_below(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2) {
  require_between(f, e.universe(), e2.universe());
  auto wb = way_below(e);
  auto wb2 = way_below(e2);
  for (auto [x, y] : wb.pairs()) {
    if (!wb2.holds(f(x), f(y))) return false;
  }
  return true;
}

bool is_galois_connection(const SpaceMap& phi, const SpaceMap& psi, const Qoset& p, const Qoset& p2) {
  require_between(phi, p.universe(), p2.universe());
  require_between(psi, p2.universe(), p.universe());
  for (unsigned x = 0; x < p.size(); ++x) {
    for (unsigned y = 0; y < p2.size(); ++y) {
      if (p2.leq(phi(x), y) != p.leq(x, psi(y))) return false;
    }
  }
  return true;
}

Report prop_strict_vs_closure(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2) {
  Report r("prop_strict_vs_closure");
  const auto& u = e.universe();
  auto strict = is_strictly_continuous(f, e, e2);
  auto closure = is_closure_continuous(f, e, e2);
  bool idempotent = e2.c().classification().idempotent;
  // closure continuity read as continuity of the associated closures
  auto bar = is_strictly_continuous(f, associated_closure(e.c()), associated_closure(e2.c()));
  r.set("strict", strict.holds).set("closure", closure.holds).set("target_idempotent", idempotent);
  r.set("closure_forms_agree", bar.holds == closure.holds);
  if (strict.holds && !closure.holds) r.fail("strictly continuous map is not closure-continuous");
  if (idempotent && closure.holds && !strict.holds) {
    r.fail("closure-continuous map into an idempotent c' is not strict (at " + u.format(*strict.witness) + ")");
  }
  if (bar.holds != closure.holds) r.fail("preimage and closure-image forms of closure continuity disagree");
  return r;
}

Report bandelt_erne(const SpaceMap& phi, const SpaceMap& psi, const EnrichedCloset& e, const EnrichedCloset& e2) {
  Report r("bandelt_erne");
  require_between(phi, e.universe(), e2.universe());
  require_between(psi, e2.universe(), e.universe());
  const auto& u2 = e2.universe();
  std::optional<Subset> broken;
  for (std::size_t m = 0; m < u2.subset_count(); ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    if (phi.preimage(e2.bracket()(a)) != e.bracket()(psi.image(a))) {
      broken = a;
      break;
    }
  }
  r.set("hypothesis", !broken);
  if (e.has_alexandrov_bracket() && e2.has_alexandrov_bracket()) {
    bool galois = is_galois_connection(phi, psi, e.order(), e2.order());
    r.set("galois", galois);
    if (galois == static_cast<bool>(broken)) r.fail("hypothesis and Galois-connection test disagree");
  }
  if (broken) {
    r.unmet("phi^-1([A']) != [psi(A')] at A'=" + u2.format(*broken));
    return r;
  }
  bool psi_strict = is_strictly_continuous(psi, e2, e).holds;
  bool preserves = preserves_way_below(phi, e, e2);
  bool continuous = is_continuous(e).continuous;
  r.set("psi_strict", psi_strict).set("phi_preserves_way_below", preserves).set("continuous", continuous);
  if (psi_strict && !preserves) r.fail("psi is strict but phi does not preserve way-below");
  if (continuous && preserves && !psi_strict) r.fail("continuous, phi preserves way-below, psi not strict");
  return r;
}

Report prop_family_strict_continuity(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2,
                                     const SubsetFamily& fam) {
  Report r("prop_family_strict_continuity");
  const auto& u = e.universe();
  auto bracket = is_bracket_continuous(f, e, e2);
  if (!bracket.holds) {
    r.unmet("f is not bracket-continuous at " + u.format(*bracket.witness));
    return r;
  }
  bool strict = is_strictly_continuous(f, e, e2).holds;
  r.set("strict", strict);

  bool generates = is_generated_by(e, fam).generated;
  bool applied = false;
  if (generates) {
    applied = true;
    bool cond = !family_condition(f, e.c(), e2.c(), fam);
    r.set("family_condition", cond);
    if (strict != cond) r.fail("strict continuity and the family condition disagree");
  } else {
    r.set("family_condition", std::nullopt);
    r.add_note("family does not generate c");
  }

  auto rel = relatively_closed_family(e);
  bool preserves = true;
  for (auto d : rel) {
    if (!relatively_closed_in(e2.c(), f.image(d))) {
      preserves = false;
      break;
    }
  }
  if (preserves && is_inner_regular(e)) {
    applied = true;
    bool closure = is_closure_continuous(f, e, e2).holds;
    bool cond = !family_condition(f, e.c(), e2.c(), rel);
    r.set("inner_regular_closure", closure).set("inner_regular_condition", cond);
    if (strict != closure || strict != cond) r.fail("inner-regular variant: strict, closure and family forms disagree");
  } else {
    r.set("inner_regular_closure", std::nullopt).set("inner_regular_condition", std::nullopt);
  }
  if (!applied) r.unmet("family does not generate c and the inner-regular variant does not apply");
  return r;
}

bool jointly_generated(const SetOperator& bracket, const SetOperator& c, const SubsetFamily& fam) {
  if (!is_generated_by(bracket, c, fam).generated) return false;
  // the bracket must be generated by fam under the identity
  return is_generated_by(SetOperator::identity(bracket.universe()), bracket, fam).generated;
}

Report prop_joint_generation_closure(const SpaceMap& f, const EnrichedCloset& e, const EnrichedCloset& e2,
                                     const SubsetFamily& fam) {
  Report r("prop_joint_generation_closure");
  require_between(f, e.universe(), e2.universe());
  if (!jointly_generated(e.bracket(), e.c(), fam)) {
    r.unmet("family does not jointly generate c and the bracket");
    return r;
  }
  for (auto d : fam) {
    if (!relatively_closed_in(e2.c(), f.image(d))) {
      r.unmet("f(D) is not relatively-closed for D=" + e.universe().format(d));
      return r;
    }
  }
  bool closure = is_closure_continuous(f, e, e2).holds;
  bool cond = !family_condition(f, e.c(), e2.c(), fam);
  r.set("closure", closure).set("family_condition", cond);
  if (closure != cond) r.fail("closure continuity and the family condition disagree");
  return r;
}

}  // namespace closetlab
