#include "closetlab/inner_regular.hpp"

#include <string>
#include <vector>

#include "closetlab/core_ops.hpp"
#include "closetlab/waybelow.hpp"

namespace closetlab {

GenerationResult is_generated_by(const SetOperator& bracket, const SetOperator& c, const SubsetFamily& fam) {
  const auto& u = c.universe();
  std::vector<Subset> t(u.subset_count());
  for (auto d : fam) t[d.bits()] = c(d);
  for (unsigned i = 0; i < u.size(); ++i) {
    const Subset::Bits bit = Subset::Bits{1} << i;
    for (std::size_t m = 0; m < t.size(); ++m) {
      if (m & bit) t[m] |= t[m ^ bit];
    }
  }
  GenerationResult r;
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    if (c(a) != t[bracket(a).bits()]) {
      r.generated = false;
      r.witness = a;
      break;
    }
  }
  return r;
}

GenerationResult is_generated_by(const EnrichedCloset& ec, const SubsetFamily& fam) {
  return is_generated_by(ec.bracket(), ec.c(), fam);
}

bool is_inner_regular(const EnrichedCloset& ec) {
  return is_generated_by(ec, relatively_closed_family(ec)).generated;
}

SubsetFamily way_below_ideals(const EnrichedCloset& ec) {
  auto wb = way_below(ec);
  SubsetFamily out(ec.universe());
  for (unsigned x = 0; x < ec.size(); ++x) out.insert(dd(wb, Subset::singleton(x)));
  return out;
}

Report lemma_singletons(const EnrichedCloset& ec) {
  Report r("lemma_singletons");
  if (!is_inner_regular(ec)) {
    r.unmet("closet is not inner-regular");
    return r;
  }
  const auto& u = ec.universe();
  bool singletons = true;
  bool ideals = true;
  for (unsigned x = 0; x < u.size(); ++x) {
    if (!relatively_closed(ec, Subset::singleton(x)) && singletons) {
      singletons = false;
      r.fail("{" + u.name(x) + "} is not relatively-closed");
    }
    if (!relatively_closed(ec, ec.order().down(x)) && ideals) {
      ideals = false;
      r.fail("down(" + u.name(x) + ") is not relatively-closed");
    }
  }
  r.set("singletons_relatively_closed", singletons).set("ideals_relatively_closed", ideals);
  return r;
}

Report prop_generation_by_ideals(const EnrichedCloset& ec, const SubsetFamily& fam) {
  Report r("prop_generation_by_ideals");
  auto wb = way_below(ec);
  if (!is_continuous(ec, wb).continuous) {
    r.unmet("closet is not continuous");
    return r;
  }
  const auto& u = ec.universe();
  auto gen = is_generated_by(ec, fam);
  bool represented = true;
  bool ideals_relatively_closed = true;
  for (unsigned x = 0; x < u.size(); ++x) {
    Subset d = dd(wb, Subset::singleton(x));
    bool found = false;
    for (auto m : fam) {
      if (ec.bracket()(m) == d) {
        found = true;
        break;
      }
    }
    if (!found && represented) {
      represented = false;
      r.add_note("dd(" + u.name(x) + ")=" + u.format(d) + " is not [D] for a member D");
    }
    ideals_relatively_closed = ideals_relatively_closed && relatively_closed(ec, d);
  }
  bool inner = is_inner_regular(ec);
  r.set("generated", gen.generated).set("ideals_represented", represented);
  r.set("inner_regular", inner).set("ideals_relatively_closed", ideals_relatively_closed);
  if (gen.generated != represented) r.fail("generation and representation of dd(x) disagree");
  if (inner != ideals_relatively_closed) r.fail("inner-regularity and relative closedness of dd(x) disagree");
  return r;
}

Report generation_remarks(const EnrichedCloset& ec) {
  Report r("generation_remarks");
  auto wb = way_below(ec);
  bool continuous = is_continuous(ec, wb).continuous;
  bool strong = continuous && is_interpolating(wb).interpolating;
  if (!continuous) {
    r.unmet("closet is not continuous");
    return r;
  }
  auto gen = is_generated_by(ec, way_below_ideals(ec));
  r.set("generated_by_ideals", gen.generated);
  if (!gen.generated) r.fail("continuous closet is not generated by {dd(x)} at " + ec.universe().format(*gen.witness));
  r.set("inner_regular", strong ? std::optional<bool>(is_inner_regular(ec)) : std::nullopt);
  if (strong && !*r.get("inner_regular")) r.fail("strongly continuous closet is not inner-regular");
  return r;
}

Report theorem_union_complete_generation(const EnrichedCloset& ec, const std::optional<SubsetFamily>& candidate,
                                         std::uint64_t cap) {
  Report r("theorem_union_complete_generation");
  const auto& u = ec.universe();
  auto wb = way_below(ec);
  if (!is_continuous(ec, wb).continuous) {
    r.unmet("closet is not continuous");
    return r;
  }
  auto interp = is_interpolating(wb);
  const bool strong = interp.interpolating;
  bool capped = false;

  // nullopt when the union-completeness search hit the cap
  auto passes = [&](const SubsetFamily& fam, const std::string& label) -> std::optional<bool> {
    for (auto d : fam) {
      if (ec.bracket()(d) != d || !relatively_closed(ec, d)) {
        r.add_note(label + ": member " + u.format(d) + " is not weakly-closed and relatively-closed");
        return false;
      }
    }
    if (auto g = is_generated_by(ec, fam); !g.generated) {
      r.add_note(label + ": does not generate c (at " + u.format(*g.witness) + ")");
      return false;
    }
    auto uc = union_complete(ec.order(), fam, cap);
    if (uc.status == UnionStatus::cap_exceeded) {
      capped = true;
      r.add_note(label + ": union-completeness cap-exceeded");
      return std::nullopt;
    }
    if (uc.status == UnionStatus::incomplete) {
      r.add_note(label + ": not union-complete (index " + u.format(*uc.index) + " yields " +
                 u.format(*uc.union_set) + ")");
      return false;
    }
    return true;
  };

  auto canonical = passes(way_below_ideals(ec), "family {dd(x)}");
  std::vector<Subset> both;
  for (auto f : closed_family(ec.bracket())) {
    if (relatively_closed(ec, f)) both.push_back(f);
  }
  auto fallback = passes(SubsetFamily(u, std::move(both)), "weakly-closed relatively-closed family");
  std::optional<bool> supplied;
  if (candidate) supplied = passes(*candidate, "supplied family");

  r.set("strongly_continuous", strong);
  r.set("ideal_family_passes", canonical);
  r.set("closed_family_passes", fallback);
  r.set("supplied_family_passes", supplied);

  bool exists = canonical.value_or(false) || fallback.value_or(false) || supplied.value_or(false);
  if (exists && !strong) {
    r.fail("a passing generating family exists but interpolation fails at (" + u.name(interp.witness->first) +
           "," + u.name(interp.witness->second) + ")");
  } else if (strong && !exists) {
    r.unmet(capped ? "no candidate family decided within the cap" : "no candidate family passed");
  } else if (!strong) {
    r.add_note("no interpolant for (" + u.name(interp.witness->first) + "," + u.name(interp.witness->second) + ")");
  }
  return r;
}

}  // namespace closetlab
