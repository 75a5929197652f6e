#include "closetlab/waybelow.hpp"

#include <vector>

#include "closetlab/core_ops.hpp"
#include "closetlab/errors.hpp"

namespace closetlab {

namespace {

std::string pair_text(const Universe& u, unsigned x, unsigned y) {
  return "(" + u.name(x) + "," + u.name(y) + ")";
}

SubsetFamily weakly_closed(const EnrichedCloset& ec) { return closed_family(ec.bracket()); }

}  // namespace

Relation way_below(const EnrichedCloset& ec) {
  const auto& u = ec.universe();
  std::vector<Subset> below(u.size(), u.full());
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    Subset br = ec.bracket()(a);
    for (unsigned y : ec.c()(a)) below[y] &= br;
  }
  Relation wb(u);
  for (unsigned y = 0; y < u.size(); ++y) {
    for (unsigned x : below[y]) wb.set(x, y);
  }
  return wb;
}

Relation way_below_fast(const EnrichedCloset& ec) {
  if (!ec.has_alexandrov_bracket()) throw InvalidStructure("way_below_fast needs an Alexandrov bracket");
  const auto& u = ec.universe();
  Relation wb(u);
  for (unsigned x = 0; x < u.size(); ++x) {
    Subset reach = ec.c()(u.complement(ec.order().up(x)));
    for (unsigned y = 0; y < u.size(); ++y) {
      if (!reach.contains(y)) wb.set(x, y);
    }
  }
  return wb;
}

Subset dd(const EnrichedCloset& ec, Subset a) { return dd(way_below(ec), a); }
Subset uu(const EnrichedCloset& ec, Subset a) { return uu(way_below(ec), a); }

ContinuityResult is_continuous(const EnrichedCloset& ec, const Relation& wb) {
  ContinuityResult r;
  for (unsigned x = 0; x < ec.size(); ++x) {
    if (!ec.c()(dd(wb, Subset::singleton(x))).contains(x)) r.failing = r.failing.with(x);
  }
  r.continuous = r.failing.empty();
  if (!r.continuous) r.witness = static_cast<unsigned>(31 - std::countl_zero(r.failing.bits()));
  return r;
}

ContinuityResult is_continuous(const EnrichedCloset& ec) { return is_continuous(ec, way_below(ec)); }

Report theorem_continuity_equiv(const EnrichedCloset& ec, unsigned galois_cap) {
  Report r("theorem_continuity_equiv");
  const auto& u = ec.universe();
  const auto& c = ec.c();
  auto wb = way_below(ec);

  bool cond1 = is_continuous(ec, wb).continuous;

  bool cond2 = true;
  for (std::size_t m = 0; m < u.subset_count() && cond2; ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    cond2 = a.subset_of(c(dd(wb, a)));
  }

  auto wc = weakly_closed(ec).members();
  std::optional<bool> cond3;
  if (u.size() <= galois_cap) {
    cond3 = true;
    for (auto a : wc) {
      for (auto b : wc) {
        if (dd(wb, a).subset_of(b) != a.subset_of(c(b))) {
          cond3 = false;
          break;
        }
      }
      if (!*cond3) break;
    }
  } else {
    r.add_note("cond3 skipped: " + std::to_string(u.size()) + " elements exceeds galois cap " +
               std::to_string(galois_cap));
  }

  bool cond4 = c(u.full()) == u.full();
  for (std::size_t i = 0; i < wc.size() && cond4; ++i) {
    for (std::size_t j = i + 1; j < wc.size(); ++j) {
      if (c(wc[i] & wc[j]) != (c(wc[i]) & c(wc[j]))) {
        cond4 = false;
        break;
      }
    }
  }

  r.set("cond1", cond1).set("cond2", cond2).set("cond3", cond3).set("cond4", cond4);
  bool agree = cond1 == cond2 && cond1 == cond4 && (!cond3 || *cond3 == cond1);
  r.set("all_agree", agree);
  if (!agree) r.fail("continuity conditions disagree");
  return r;
}

Report open_iff_wayupper(const EnrichedCloset& ec) {
  Report r("open_iff_wayupper");
  const auto& u = ec.universe();
  auto wb = way_below(ec);
  bool continuous = is_continuous(ec, wb).continuous;
  bool forward = true;
  bool backward = true;
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset g(static_cast<Subset::Bits>(m));
    Subset rest = u.complement(g);
    bool weakly_open = ec.bracket()(rest) == rest;
    bool way_upper = uu(wb, g) == g;
    bool open = ec.c()(rest) == rest;
    if (weakly_open && way_upper && !open && forward) {
      forward = false;
      r.fail("weakly-open way-upper " + u.format(g) + " is not open");
    }
    if (continuous && open && !(weakly_open && way_upper) && backward) {
      backward = false;
      r.fail("open " + u.format(g) + " is not weakly-open and way-upper on a continuous closet");
    }
  }
  r.set("continuous", continuous);
  r.set("weakly_open_way_upper_implies_open", forward);
  r.set("open_implies_weakly_open_way_upper", continuous ? std::optional<bool>(backward) : std::nullopt);
  if (!continuous) r.add_note("converse not asserted: closet is not continuous");
  return r;
}

Report corollary_connected_ideals(const EnrichedCloset& ec) {
  Report r("corollary_connected_ideals");
  auto wb = way_below(ec);
  if (!is_continuous(ec, wb).continuous) {
    r.unmet("closet is not continuous");
    return r;
  }
  const auto& u = ec.universe();
  auto bar = associated_closure(ec.c());
  auto opens = open_family(ec.c());
  bool connected = true;
  for (unsigned x = 0; x < u.size() && connected; ++x) {
    Subset d = dd(wb, Subset::singleton(x));
    // A split G, G' exists iff some open G meets d, misses part of d, and the
    // largest open set disjoint from G (the complement of its closure)
    // covers the rest of d.
    for (auto g : opens) {
      Subset inside = d & g;
      Subset outside = d - g;
      if (inside.empty() || outside.empty()) continue;
      if (!bar(g).intersects(outside)) {
        connected = false;
        r.fail("dd(" + u.name(x) + ")=" + u.format(d) + " is split by " + u.format(g) + " and " +
               u.format(u.complement(bar(g))));
        break;
      }
    }
  }
  r.set("all_connected", connected);
  return r;
}

bool is_basis(const EnrichedCloset& ec, const Relation& wb, Subset b) {
  for (unsigned x = 0; x < ec.size(); ++x) {
    if (!ec.c()(dd(wb, Subset::singleton(x)) & b).contains(x)) return false;
  }
  return true;
}

bool is_basis(const EnrichedCloset& ec, Subset b) { return is_basis(ec, way_below(ec), b); }

Subset compact_elements(const Relation& wb) {
  Subset out;
  for (unsigned k = 0; k < wb.size(); ++k) {
    if (wb.holds(k, k)) out = out.with(k);
  }
  return out;
}

bool is_algebraic(const EnrichedCloset& ec) {
  auto wb = way_below(ec);
  return is_basis(ec, wb, compact_elements(wb));
}

Report basis_prop_check(const EnrichedCloset& ec, Subset b) {
  Report r("basis_prop_check");
  const auto& u = ec.universe();
  auto wb = way_below(ec);
  bool basis = is_basis(ec, wb, b);
  bool continuous = is_continuous(ec, wb).continuous;
  bool refined = true;
  for (auto [x, y] : wb.pairs()) {
    if (!ec.bracket()(dd(wb, Subset::singleton(y)) & b).contains(x)) {
      refined = false;
      break;
    }
  }
  r.set("basis", basis).set("continuous", continuous).set("way_below_refines", refined);
  if (basis != (continuous && refined)) r.fail(u.format(b) + ": basis disagrees with its characterization");
  return r;
}

Report basic_properties(const EnrichedCloset& ec) {
  Report r("basic_properties");
  const auto& u = ec.universe();
  const auto& leq = ec.order().relation();
  auto wb = way_below(ec);
  auto check = [&](const char* name, bool ok, const std::string& why) {
    r.set(name, ok);
    if (!ok) r.fail(why);
  };
  check("transitive", wb.is_transitive(), "way-below is not transitive");
  check("below_implies_leq", wb.subset_of(leq), "x << y without x <= y");
  check("leq_then_below", leq.compose(wb).subset_of(wb), "x <= y << z without x << z");
  check("below_then_leq", wb.compose(leq).subset_of(wb), "x << y <= z without x << z");
  bool chain = true;
  for (unsigned x = 0; x < u.size() && chain; ++x) {
    Subset d = dd(wb, Subset::singleton(x));
    Subset down = ec.order().down(x);
    if (!d.subset_of(down) || !down.subset_of(ec.c()(Subset::singleton(x)))) {
      chain = false;
      r.fail("dd(x) inside down(x) inside c({x}) fails at " + u.name(x));
    }
  }
  r.set("dd_down_c_chain", chain);
  return r;
}

Report way_below_agreement(const EnrichedCloset& ec) {
  Report r("way_below_agreement");
  if (!ec.has_alexandrov_bracket()) {
    r.unmet("bracket is not Alexandrov");
    return r;
  }
  auto slow = way_below(ec);
  auto fast = way_below_fast(ec);
  r.set("agree", slow == fast);
  if (!(slow == fast)) {
    for (unsigned x = 0; x < ec.size(); ++x) {
      for (unsigned y = 0; y < ec.size(); ++y) {
        if (slow.holds(x, y) != fast.holds(x, y)) {
          r.fail("fast and brute way-below differ at " + pair_text(ec.universe(), x, y));
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace closetlab
