#include "closetlab/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "closetlab/core_ops.hpp"
#include "closetlab/errors.hpp"
#include "closetlab/inner_regular.hpp"
#include "closetlab/maps.hpp"
#include "closetlab/topology.hpp"

namespace closetlab {

namespace {

struct MapCase {
  std::string name;
  SpaceMap map;
  std::shared_ptr<const EnrichedCloset> target;
  std::optional<SpaceMap> right;
};

std::vector<MapCase> map_cases(const ParsedSpace& space) {
  std::vector<MapCase> out;
  for (const auto& m : space.maps) out.push_back({m.name, m.map, m.target, m.right});
  if (out.empty()) {
    auto id = SpaceMap::identity(space.closet->universe());
    out.push_back({"id", id, space.closet, id});
  }
  return out;
}

// First of singletons with the empty set, {dd(x)}, all subsets that
// generates c. All subsets always does.
SubsetFamily generating_family(const EnrichedCloset& ec) {
  auto singles = singletons(ec.universe(), true);
  if (is_generated_by(ec, singles).generated) return singles;
  auto ideals = way_below_ideals(ec);
  if (is_generated_by(ec, ideals).generated) return ideals;
  return all_subsets(ec.universe());
}

Report classification(const EnrichedCloset& ec) {
  Report r("classification", Verdict::info);
  const auto& u = ec.universe();
  const auto& bc = ec.bracket().classification();
  const auto& cc = ec.c().classification();
  r.set("bracket_closure", bc.closure());
  r.set("c_preclosure", cc.preclosure());
  r.set("c_idempotent", cc.idempotent);
  r.set("bracket_alexandrov", ec.has_alexandrov_bracket());
  r.set("order_antisymmetric", ec.order().is_poset());
  if (cc.not_idempotent_at) r.witness = "c not idempotent at " + u.format(*cc.not_idempotent_at);
  return r;
}

Report compatibility(const EnrichedCloset& ec) {
  // assemble already rejects incompatible pairs; this re-checks the identities.
  Report r("compatibility", Verdict::info);
  const auto& u = ec.universe();
  bool ok = true;
  for (std::size_t m = 0; m < u.subset_count() && ok; ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    Subset ca = ec.c()(a);
    if (ec.bracket()(ca) != ca || ec.c()(ec.bracket()(a)) != ca) {
      ok = false;
      r.witness = u.format(a);
    }
  }
  r.set("compatible", ok);
  return r;
}

Report way_below_summary(const EnrichedCloset& ec) {
  Report r("way_below", Verdict::info);
  auto wb = way_below(ec);
  r.set("reflexive_somewhere", static_cast<bool>(!compact_elements(wb).empty()));
  r.note = format_pairs(ec.universe(), wb.pairs());
  return r;
}

Report continuity(const EnrichedCloset& ec) {
  Report r("continuity", Verdict::info);
  const auto& u = ec.universe();
  auto res = is_continuous(ec);
  r.set("continuous", res.continuous);
  if (res.witness) {
    r.witness = u.name(*res.witness);
    r.note = "failing at " + u.format(res.failing);
  }
  return r;
}

Report interpolation(const EnrichedCloset& ec) {
  Report r("interpolation", Verdict::info);
  const auto& u = ec.universe();
  auto wb = way_below(ec);
  auto res = is_interpolating(wb);
  bool continuous = is_continuous(ec, wb).continuous;
  r.set("interpolating", res.interpolating);
  r.set("strongly_continuous", continuous && res.interpolating);
  if (res.witness) r.witness = "(" + u.name(res.witness->first) + "," + u.name(res.witness->second) + ")";
  return r;
}

Report inner_regularity(const EnrichedCloset& ec) {
  Report r("inner_regularity", Verdict::info);
  r.set("inner_regular", is_inner_regular(ec));
  r.set("algebraic", is_algebraic(ec));
  r.set("generated_by_ideals", is_generated_by(ec, way_below_ideals(ec)).generated);
  return r;
}

Report topology(const EnrichedCloset& ec) {
  Report r("topology", Verdict::info);
  auto b = is_topological(ec.bracket());
  auto c = is_topological(ec.c());
  r.set("bracket_topological", b.topological);
  r.set("topological", c.topological);
  if (!c.topological) r.witness = c.reason;
  return r;
}

using SingleFn = std::function<Report(const EnrichedCloset&, const AnalysisOptions&)>;
using MapFn = std::function<Report(const EnrichedCloset&, const MapCase&)>;

struct Checker {
  std::string name;
  std::string module;
  SingleFn single;
  MapFn per_map;
};

const std::vector<Checker>& registry() {
  static const std::vector<Checker> checks = [] {
    std::vector<Checker> v;
    auto add = [&](std::string name, std::string module, SingleFn f) {
      v.push_back({std::move(name), std::move(module), std::move(f), nullptr});
    };
    auto add_map = [&](std::string name, MapFn f) { v.push_back({std::move(name), "maps", nullptr, std::move(f)}); };
    using O = AnalysisOptions;
    using E = EnrichedCloset;

    add("classification", "core_ops", [](const E& e, const O&) { return classification(e); });
    add("compatibility", "core_ops", [](const E& e, const O&) { return compatibility(e); });
    add("lemma_closed_open", "core_ops", [](const E& e, const O&) { return lemma_closed_open(e.c()); });

    add("way_below", "waybelow", [](const E& e, const O&) { return way_below_summary(e); });
    add("continuity", "waybelow", [](const E& e, const O&) { return continuity(e); });
    add("basic_properties", "waybelow", [](const E& e, const O&) { return basic_properties(e); });
    add("way_below_agreement", "waybelow", [](const E& e, const O&) { return way_below_agreement(e); });
    add("theorem_continuity_equiv", "waybelow",
        [](const E& e, const O& o) { return theorem_continuity_equiv(e, o.galois_cap); });
    add("open_iff_wayupper", "waybelow", [](const E& e, const O&) { return open_iff_wayupper(e); });
    add("corollary_connected_ideals", "waybelow", [](const E& e, const O&) { return corollary_connected_ideals(e); });
    add("basis_prop_check", "waybelow",
        [](const E& e, const O&) { return basis_prop_check(e, compact_elements(way_below(e))); });

    add("interpolation", "interpolation", [](const E& e, const O&) { return interpolation(e); });
    add("interpolation_agreement", "interpolation", [](const E& e, const O&) { return interpolation_agreement(e); });
    add("interpolation_lemma", "interpolation", [](const E& e, const O&) { return interpolation_lemma(e); });
    add("prop_interpolation_char", "interpolation", [](const E& e, const O&) { return prop_interpolation_char(e); });
    add("prop_way_below_images", "interpolation", [](const E& e, const O&) { return prop_way_below_images(e); });
    add("theorem_interpolation_open", "interpolation",
        [](const E& e, const O&) { return theorem_interpolation_open(e); });
    add("theorem_interpolation_idempotent", "interpolation",
        [](const E& e, const O& o) { return theorem_interpolation_idempotent(e, o.union_cap); });
    add("corollary_strong_continuity", "interpolation",
        [](const E& e, const O& o) { return corollary_strong_continuity(e, o.union_cap); });
    add("prop_open_way_upper", "interpolation",
        [](const E& e, const O& o) { return prop_open_way_upper(e, o.union_cap); });
    add("corollary_complete_distributivity", "interpolation",
        [](const E& e, const O& o) { return corollary_complete_distributivity(e, o.lattice_cap); });

    add("inner_regularity", "inner_regular", [](const E& e, const O&) { return inner_regularity(e); });
    add("lemma_singletons", "inner_regular", [](const E& e, const O&) { return lemma_singletons(e); });
    add("prop_generation_by_ideals", "inner_regular",
        [](const E& e, const O&) { return prop_generation_by_ideals(e, way_below_ideals(e)); });
    add("generation_remarks", "inner_regular", [](const E& e, const O&) { return generation_remarks(e); });
    add("theorem_union_complete_generation", "inner_regular",
        [](const E& e, const O& o) { return theorem_union_complete_generation(e, std::nullopt, o.union_cap); });

    add_map("prop_strict_vs_closure",
            [](const E& e, const MapCase& m) { return prop_strict_vs_closure(m.map, e, *m.target); });
    add_map("bandelt_erne", [](const E& e, const MapCase& m) {
      if (!m.right) {
        Report r("bandelt_erne");
        r.unmet("map has no right adjoint candidate");
        return r;
      }
      return bandelt_erne(m.map, *m.right, e, *m.target);
    });
    add_map("prop_family_strict_continuity", [](const E& e, const MapCase& m) {
      return prop_family_strict_continuity(m.map, e, *m.target, generating_family(e));
    });
    add_map("prop_joint_generation_closure", [](const E& e, const MapCase& m) {
      return prop_joint_generation_closure(m.map, e, *m.target, all_subsets(e.universe()));
    });

    add("topology", "topology", [](const E& e, const O&) { return topology(e); });
    add("topology_agreement", "topology", [](const E& e, const O&) { return topology_agreement(e.c()); });
    add("prop_topological", "topology", [](const E& e, const O&) { return prop_topological(e); });
    return v;
  }();
  return checks;
}

std::vector<CheckEntry> run(const Checker& ch, const ParsedSpace& space, const AnalysisOptions& options) {
  std::vector<CheckEntry> out;
  if (ch.single) {
    out.push_back({ch.module, ch.single(*space.closet, options)});
    return out;
  }
  for (const auto& m : map_cases(space)) {
    Report r = ch.per_map(*space.closet, m);
    r.check += ":" + m.name;
    out.push_back({ch.module, std::move(r)});
  }
  return out;
}

AnalysisReport header(const ParsedSpace& space) {
  AnalysisReport out;
  const auto& ec = *space.closet;
  out.name = space.name;
  out.n = ec.size();
  out.elements = ec.universe().names();
  out.bracket_kind = ec.has_alexandrov_bracket() ? "alexandrov" : ec.bracket().kind();
  out.c_kind = ec.c().kind();
  return out;
}

Json fact_json(const Fact& f) { return f.value ? Json(*f.value) : Json(nullptr); }

std::string fact_text(const Fact& f) {
  return f.name + "=" + (f.value ? (*f.value ? "true" : "false") : "skipped");
}

}  // namespace

bool AnalysisReport::inconsistent() const {
  for (const auto& c : checks) {
    if (c.report.inconsistent()) return true;
  }
  return false;
}

const std::vector<std::string>& checker_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& c : registry()) v.push_back(c.name);
    return v;
  }();
  return names;
}

const std::vector<std::string>& theorem_checker_names() {
  static const std::vector<std::string> names = [] {
    static const std::vector<std::string> info{"classification", "compatibility", "way_below",  "continuity",
                                               "interpolation",  "inner_regularity", "topology"};
    std::vector<std::string> v;
    for (const auto& c : registry()) {
      if (std::find(info.begin(), info.end(), c.name) == info.end()) v.push_back(c.name);
    }
    return v;
  }();
  return names;
}

bool is_checker_name(const std::string& name) {
  for (const auto& n : checker_names()) {
    if (n == name) return true;
  }
  return false;
}

std::vector<CheckEntry> run_check(const std::string& name, const ParsedSpace& space, const AnalysisOptions& options) {
  for (const auto& c : registry()) {
    if (c.name == name) return run(c, space, options);
  }
  throw Error("unknown checker '" + name + "'");
}

AnalysisReport analyze(const ParsedSpace& space, const AnalysisOptions& options) {
  auto start = std::chrono::steady_clock::now();
  AnalysisReport out = header(space);
  for (const auto& c : registry()) {
    for (auto& entry : run(c, space, options)) out.checks.push_back(std::move(entry));
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

AnalysisReport analyze_only(const ParsedSpace& space, const std::string& check, const AnalysisOptions& options) {
  auto start = std::chrono::steady_clock::now();
  AnalysisReport out = header(space);
  out.checks = run_check(check, space, options);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Json report_json(const AnalysisReport& report, bool timing) {
  Json checks = Json::array();
  for (const auto& entry : report.checks) {
    const Report& r = entry.report;
    Json facts = Json::object();
    for (const auto& f : r.facts) facts[f.name] = fact_json(f);
    Json c{{"check", r.check},
           {"module", entry.module},
           {"verdict", std::string(to_string(r.verdict))},
           {"facts", facts}};
    if (!r.witness.empty()) c["witness"] = r.witness;
    if (!r.note.empty()) c["note"] = r.note;
    checks.push_back(std::move(c));
  }
  Json out{{"name", report.name},
           {"n", report.n},
           {"elements", report.elements},
           {"bracket", report.bracket_kind},
           {"c", report.c_kind},
           {"inconsistent", report.inconsistent()},
           {"checks", checks}};
  if (timing) out["seconds"] = report.seconds;
  return out;
}

std::string report_text(const AnalysisReport& report, bool timing) {
  std::ostringstream out;
  out << "structure " << (report.name.empty() ? "<unnamed>" : report.name) << " (n=" << report.n << ")\n";
  out << "  bracket: " << report.bracket_kind << "\n  c: " << report.c_kind << "\n";
  std::string module;
  for (const auto& entry : report.checks) {
    if (entry.module != module) {
      module = entry.module;
      out << "[" << module << "]\n";
    }
    const Report& r = entry.report;
    out << "  " << r.check << ": " << to_string(r.verdict);
    for (const auto& f : r.facts) out << " " << fact_text(f);
    out << "\n";
    if (!r.witness.empty()) out << "    witness: " << r.witness << "\n";
    if (!r.note.empty()) out << "    note: " << r.note << "\n";
  }
  out << (report.inconsistent() ? "INCONSISTENT\n" : "consistent\n");
  if (timing) out << "seconds: " << report.seconds << "\n";
  return out.str();
}

std::string format_pairs(const Universe& u, const std::vector<std::pair<unsigned, unsigned>>& pairs) {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ",";
    out += "(" + u.name(pairs[i].first) + "," + u.name(pairs[i].second) + ")";
  }
  return out + "}";
}

Json way_below_json(const ParsedSpace& space) {
  const auto& ec = *space.closet;
  const auto& u = ec.universe();
  auto wb = way_below(ec);
  Json pairs = Json::array();
  for (auto [x, y] : wb.pairs()) pairs.push_back(Json::array({u.name(x), u.name(y)}));
  Json down = Json::object();
  Json up = Json::object();
  for (unsigned x = 0; x < u.size(); ++x) {
    down[u.name(x)] = mask_to_hex(dd(wb, Subset::singleton(x)));
    up[u.name(x)] = mask_to_hex(uu(wb, Subset::singleton(x)));
  }
  auto cont = is_continuous(ec, wb);
  Json out{{"name", space.name},  {"elements", u.names()}, {"pairs", pairs}, {"dd", down}, {"uu", up},
           {"continuous", cont.continuous}};
  if (cont.witness) out["witness"] = u.name(*cont.witness);
  return out;
}

std::string way_below_text(const ParsedSpace& space) {
  const auto& ec = *space.closet;
  const auto& u = ec.universe();
  auto wb = way_below(ec);
  std::ostringstream out;
  out << "way-below " << format_pairs(u, wb.pairs()) << "\n";
  for (unsigned x = 0; x < u.size(); ++x) {
    out << "  dd(" << u.name(x) << ") = " << u.format(dd(wb, Subset::singleton(x))) << "  uu(" << u.name(x)
        << ") = " << u.format(uu(wb, Subset::singleton(x))) << "\n";
  }
  auto cont = is_continuous(ec, wb);
  out << "continuous: " << (cont.continuous ? "true" : "false");
  if (cont.witness) out << " (witness " << u.name(*cont.witness) << ")";
  out << "\n";
  return out.str();
}

}  // namespace closetlab
