#include <doctest.h>

#include <closetlab/constructors.hpp>
#include <closetlab/errors.hpp>
#include <closetlab/fixtures.hpp>
#include <closetlab/interpolation.hpp>
#include <closetlab/search.hpp>
#include <closetlab/waybelow.hpp>

#include "support.hpp"

using namespace closetlab;
using support::mask;
using support::pairs_of;

namespace {

oracle::Pairs oracle_way_below(const EnrichedCloset& ec) {
  return oracle::way_below(static_cast<int>(ec.size()), support::op_of(ec.bracket()), support::op_of(ec.c()));
}

oracle::Pairs named_pairs(const EnrichedCloset& ec, std::initializer_list<std::pair<const char*, const char*>> ps) {
  oracle::Pairs out;
  for (auto [a, b] : ps) {
    out.insert({static_cast<int>(ec.universe().index_of(a)), static_cast<int>(ec.universe().index_of(b))});
  }
  return out;
}

}  // namespace

// Regression constants. Each was first reproduced with the brute-force
// oracle, which the test keeps checking alongside the library.
TEST_CASE("fixture way-below relations") {
  struct Expect {
    const char* fixture;
    std::vector<std::pair<const char*, const char*>> pairs;
  };
  const std::vector<Expect> expected{
      {"CHAIN3_SHIFT", {{"0", "0"}, {"0", "1"}, {"0", "2"}, {"1", "2"}}},
      {"CHAIN3_RANEY", {{"0", "1"}, {"0", "2"}, {"1", "1"}, {"1", "2"}, {"2", "2"}}},
      {"CHAIN3_PHI_ID", {{"0", "0"}, {"0", "1"}, {"0", "2"}, {"1", "1"}, {"1", "2"}, {"2", "2"}}},
      {"ANTICHAIN2_K", {{"p", "p"}}},
      {"M3_RANEY", {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"bot", "top"}}},
      {"B2_RANEY", {{"bot", "a"}, {"bot", "b"}, {"bot", "top"}, {"a", "a"}, {"a", "top"}, {"b", "b"}, {"b", "top"}}},
      {"N5_RANEY",
       {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"bot", "top"}, {"a", "a"}, {"a", "b"}, {"a", "top"}, {"c", "c"},
        {"c", "top"}}},
  };
  for (const auto& e : expected) {
    CAPTURE(e.fixture);
    auto ec = closet_fixture(e.fixture);
    oracle::Pairs frozen;
    for (auto [a, b] : e.pairs) frozen.insert(*named_pairs(ec, {{a, b}}).begin());
    CHECK(oracle_way_below(ec) == frozen);
    CHECK(pairs_of(way_below(ec)) == frozen);
    CHECK(pairs_of(way_below_fast(ec)) == frozen);
  }
}

TEST_CASE("fixture continuity verdicts") {
  auto shift = closet_fixture("CHAIN3_SHIFT");
  CHECK(is_continuous(shift).continuous);
  CHECK(dd(shift, mask({2})) == mask({0, 1}));
  CHECK(dd(shift, Subset{}).empty());

  auto m3 = closet_fixture("M3_RANEY");
  auto res = is_continuous(m3);
  CHECK_FALSE(res.continuous);
  REQUIRE(res.witness);
  CHECK(m3.universe().name(*res.witness) == "top");
  CHECK(res.failing == m3.universe().subset({"a", "b", "c", "top"}));
  CHECK(dd(m3, m3.universe().subset({"top"})) == m3.universe().subset({"bot"}));

  CHECK(is_continuous(closet_fixture("B2_RANEY")).continuous);
  auto n5 = is_continuous(closet_fixture("N5_RANEY"));
  CHECK_FALSE(n5.continuous);
  CHECK(closet_fixture("N5_RANEY").universe().name(*n5.witness) == "b");
  CHECK(is_continuous(closet_fixture("CHAIN3_RANEY")).continuous);

  for (const auto& name : closet_fixture_names()) {
    auto ec = closet_fixture(name);
    CAPTURE(name);
    CHECK(is_continuous(ec).continuous == oracle::is_continuous(static_cast<int>(ec.size()), oracle_way_below(ec),
                                                                support::op_of(ec.c())));
  }
}

TEST_CASE("continuity equivalence on fixtures") {
  for (const char* name : {"CHAIN3_SHIFT", "B2_RANEY"}) {
    auto r = theorem_continuity_equiv(closet_fixture(name));
    CAPTURE(name);
    CHECK(r.verdict == Verdict::holds);
    for (const char* c : {"cond1", "cond2", "cond3", "cond4"}) CHECK(r.get(c) == true);
  }
  auto m3 = theorem_continuity_equiv(closet_fixture("M3_RANEY"));
  CHECK(m3.verdict == Verdict::holds);
  for (const char* c : {"cond1", "cond2", "cond3", "cond4"}) CHECK(m3.get(c) == false);

  auto capped = theorem_continuity_equiv(closet_fixture("B2_RANEY"), 3);
  CHECK_FALSE(capped.get("cond3").has_value());
  CHECK(capped.get("cond1") == true);
  CHECK(capped.get("all_agree") == true);
}

TEST_CASE("open sets and connected ideals on fixtures") {
  auto shift = open_iff_wayupper(closet_fixture("CHAIN3_SHIFT"));
  CHECK(shift.verdict == Verdict::holds);
  CHECK(shift.get("open_implies_weakly_open_way_upper") == true);
  auto m3 = open_iff_wayupper(closet_fixture("M3_RANEY"));
  CHECK(m3.verdict == Verdict::holds);
  CHECK_FALSE(m3.get("open_implies_weakly_open_way_upper").has_value());

  CHECK(corollary_connected_ideals(closet_fixture("CHAIN3_SHIFT")).get("all_connected") == true);
  CHECK(corollary_connected_ideals(closet_fixture("B2_RANEY")).get("all_connected") == true);
  CHECK(corollary_connected_ideals(closet_fixture("M3_RANEY")).verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("bases, compact elements and algebraicity") {
  auto anti = closet_fixture("ANTICHAIN2_K");
  auto wb = way_below(anti);
  CHECK(compact_elements(wb) == anti.universe().subset({"p"}));
  CHECK(is_algebraic(anti));
  auto raney = closet_fixture("CHAIN3_RANEY");
  CHECK(compact_elements(way_below(raney)) == mask({1, 2}));
  CHECK(is_algebraic(raney));

  auto pb = basis_prop_check(anti, anti.universe().subset({"p"}));
  CHECK(pb.get("basis") == true);
  CHECK(pb.get("way_below_refines") == true);
  auto shift = closet_fixture("CHAIN3_SHIFT");
  auto empty = basis_prop_check(shift, Subset{});
  CHECK(empty.get("basis") == false);
  CHECK(empty.get("way_below_refines") == false);
  CHECK(empty.verdict == Verdict::holds);

  for (const auto& name : closet_fixture_names()) {
    auto ec = closet_fixture(name);
    CHECK(is_basis(ec, ec.universe().full()) == is_continuous(ec).continuous);
  }
}

TEST_CASE("way-below oracle equivalence and basic properties on sampled closets") {
  auto closets = support::sampled_closets(4, 2);
  REQUIRE(closets.size() > 600);
  for (const auto& ec : closets) {
    auto wb = way_below(ec);
    auto expected = oracle_way_below(ec);
    REQUIRE(pairs_of(wb) == expected);
    if (ec.has_alexandrov_bracket()) CHECK(way_below_fast(ec) == wb);
    CHECK(is_continuous(ec, wb).continuous ==
          oracle::is_continuous(static_cast<int>(ec.size()), expected, support::op_of(ec.c())));
    auto basic = basic_properties(ec);
    CHECK(basic.verdict == Verdict::holds);
    for (const auto& f : basic.facts) CHECK(f.value == true);

    // The same properties, checked directly on the oracle relation.
    auto leq = support::matrix_of(ec.order());
    int n = static_cast<int>(ec.size());
    for (auto [x, y] : expected) {
      CHECK(leq[x][y]);
      for (int z = 0; z < n; ++z) {
        if (expected.count({y, z})) CHECK(expected.count({x, z}));
        if (leq[z][x]) CHECK(expected.count({z, y}));
        if (leq[y][z]) CHECK(expected.count({x, z}));
      }
    }
  }
}

TEST_CASE("way_below_fast requires an Alexandrov bracket") {
  auto q = order_fixture("M3");
  auto dm = dedekind_macneille(q);
  auto ec = assemble(dm, dm);
  CHECK_FALSE(ec.has_alexandrov_bracket());
  CHECK_THROWS_AS(way_below_fast(ec), InvalidStructure);
  CHECK(way_below_agreement(ec).verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("closed forms for the constructor families") {
  long families = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& q : all_qosets(n)) {
      const auto& u = q.universe();
      auto leq = support::matrix_of(q);
      int ni = static_cast<int>(n);
      auto alex = alexandrov(q);
      auto maps = oracle::all_maps(ni, ni);
      for (const auto& m : maps) {
        if (!oracle::monotone(leq, leq, m)) continue;
        bool infl = true;
        bool defl = true;
        for (int x = 0; x < ni; ++x) {
          infl = infl && leq[x][m[x]];
          defl = defl && leq[m[x]][x];
        }
        if (infl) {
          auto ec = assemble(alex, inflationary(q, support::map_of(u, u, m)));
          oracle::Pairs formula;
          for (int x = 0; x < ni; ++x) {
            for (int y = 0; y < ni; ++y) {
              bool ok = true;
              for (int a = 0; a < ni; ++a) ok = ok && (!leq[y][m[a]] || leq[x][a]);
              if (ok) formula.insert({x, y});
            }
          }
          ++families;
          CHECK(pairs_of(way_below(ec)) == formula);
        }
        if (defl) {
          for (const auto& other : maps) {
            if (!oracle::monotone(leq, leq, other)) continue;
            auto ec = assemble(alex, selfmap_family(q, {support::map_of(u, u, m), support::map_of(u, u, other)}));
            oracle::Pairs formula;
            for (int x = 0; x < ni; ++x) {
              for (int y = 0; y < ni; ++y) {
                if (leq[x][m[y]] && leq[x][other[y]]) formula.insert({x, y});
              }
            }
            ++families;
            CHECK(pairs_of(way_below(ec)) == formula);
          }
        }
      }
      for (const auto& k : oracle::powerset(ni)) {
        if (k.empty()) continue;
        auto ec = assemble(alex, compact_set(q, support::from_set(k)));
        oracle::Pairs formula;
        for (int x = 0; x < ni; ++x) {
          for (int y = 0; y < ni; ++y) {
            for (int c : k) {
              if (leq[x][c] && leq[c][y]) formula.insert({x, y});
            }
          }
        }
        ++families;
        CHECK(pairs_of(way_below(ec)) == formula);
      }
      auto up = assemble(alex, upper_topology(q));
      auto closed = oracle::upper_topology_closed(leq);
      oracle::Pairs hyper;
      for (int x = 0; x < ni; ++x) {
        oracle::Set rest;
        auto upx = oracle::up(leq, {x});
        for (int z = 0; z < ni; ++z) {
          if (!upx.count(z)) rest.insert(z);
        }
        auto cl = oracle::closure_in(closed, ni, rest);
        for (int y = 0; y < ni; ++y) {
          if (!cl.count(y)) hyper.insert({x, y});
        }
      }
      ++families;
      CHECK(pairs_of(way_below(up)) == hyper);
    }
  }
  CHECK(families > 500);
}

TEST_CASE("Alexandrov-enriched structures are strongly continuous and algebraic") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& q : all_qosets(n)) {
      auto alex = alexandrov(q);
      auto ec = assemble(alex, alex);
      auto wb = way_below(ec);
      CHECK(wb == q.relation());
      CHECK(is_continuous(ec, wb).continuous);
      CHECK(is_strongly_continuous(ec));
      CHECK(is_algebraic(ec));
    }
  }
}
