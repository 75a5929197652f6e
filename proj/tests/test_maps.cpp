#include <doctest.h>

#include <closetlab/constructors.hpp>
#include <closetlab/fixtures.hpp>
#include <closetlab/maps.hpp>
#include <closetlab/waybelow.hpp>

#include "support.hpp"

using namespace closetlab;
using support::map_of;
using support::mask;

TEST_CASE("identity maps are continuous in every sense") {
  for (const auto& name : closet_fixture_names()) {
    auto ec = closet_fixture(name);
    auto id = SpaceMap::identity(ec.universe());
    CHECK(is_strictly_continuous(id, ec, ec).holds);
    CHECK(is_closure_continuous(id, ec, ec).holds);
    CHECK(preserves_way_below(id, ec, ec));
    auto be = bandelt_erne(id, id, ec, ec);
    CHECK(be.verdict == Verdict::holds);
    CHECK(be.get("hypothesis") == true);
  }
}

TEST_CASE("strict continuity checks the empty set") {
  // c(empty) = {0} in CHAIN3_RANEY, but the Alexandrov target keeps the
  // empty set closed, so a constant map fails exactly at A = empty.
  auto raney = closet_fixture("CHAIN3_RANEY");
  auto chain = order_fixture("CHAIN3");
  auto alex = alexandrov(chain);
  auto target = assemble(alex, alex);
  auto constant = map_of(raney.universe(), chain.universe(), {2, 2, 2});
  auto res = is_strictly_continuous(constant, raney, target);
  CHECK_FALSE(res.holds);
  REQUIRE(res.witness);
  CHECK(*res.witness == Subset{});
}

TEST_CASE("shift to Raney on the same carrier") {
  auto shift = closet_fixture("CHAIN3_SHIFT");
  auto raney = closet_fixture("CHAIN3_RANEY");
  auto id = SpaceMap::identity(shift.universe());
  bool expected = oracle::strictly_continuous(3, {0, 1, 2}, support::op_of(shift.c()), support::op_of(raney.c()));
  CHECK(is_strictly_continuous(id, shift, raney).holds == expected);
  CHECK(prop_strict_vs_closure(id, shift, raney).verdict != Verdict::inconsistent);
}

TEST_CASE("Galois pairs and the hypothesis") {
  auto chain = order_fixture("CHAIN3");
  const auto& u = chain.universe();
  auto alex = alexandrov(chain);
  auto ec = assemble(alex, inflationary(chain, map_of(u, u, {1, 2, 2})));
  // phi is the lower adjoint of the shift psi.
  auto phi = map_of(u, u, {0, 0, 1});
  auto psi = map_of(u, u, {1, 2, 2});
  CHECK(is_galois_connection(phi, psi, chain, chain));
  auto r = bandelt_erne(phi, psi, ec, ec);
  CHECK(r.get("hypothesis") == true);
  CHECK(r.get("galois") == true);
  CHECK(r.verdict != Verdict::inconsistent);

  auto broken = bandelt_erne(phi, SpaceMap::identity(u), ec, ec);
  CHECK(broken.verdict == Verdict::hypothesis_not_met);
  CHECK(broken.get("galois") == false);
  CHECK(broken.note.find("A'=") != std::string::npos);
}

TEST_CASE("map checks agree with the oracle on small closets") {
  auto closets = support::sampled_closets(3, 1, 5);
  REQUIRE(closets.size() > 20);
  long pairs = 0;
  for (std::size_t i = 0; i < closets.size(); i += 3) {
    for (std::size_t j = 0; j < closets.size(); j += 5) {
      const auto& e = closets[i];
      const auto& e2 = closets[j];
      int n = static_cast<int>(e.size());
      int n2 = static_cast<int>(e2.size());
      auto c = support::op_of(e.c());
      auto c2 = support::op_of(e2.c());
      auto p = support::matrix_of(e.order());
      auto p2 = support::matrix_of(e2.order());
      for (const auto& f : oracle::all_maps(n, n2)) {
        auto map = map_of(e.universe(), e2.universe(), f);
        ++pairs;
        bool strict = is_strictly_continuous(map, e, e2).holds;
        CHECK(strict == oracle::strictly_continuous(n, f, c, c2));
        CHECK(is_closure_continuous(map, e, e2).holds == oracle::closure_continuous(n2, f, c, c2));
        CHECK_FALSE(prop_strict_vs_closure(map, e, e2).inconsistent());
        CHECK_FALSE(prop_family_strict_continuity(map, e, e2, all_subsets(e.universe())).inconsistent());
        CHECK_FALSE(prop_joint_generation_closure(map, e, e2, all_subsets(e.universe())).inconsistent());
        for (const auto& g : oracle::all_maps(n2, n)) {
          auto back = map_of(e2.universe(), e.universe(), g);
          CHECK(is_galois_connection(map, back, e.order(), e2.order()) == oracle::galois(p, p2, f, g));
          CHECK_FALSE(bandelt_erne(map, back, e, e2).inconsistent());
        }
      }
    }
  }
  CHECK(pairs > 500);
}

TEST_CASE("joint generation") {
  auto raney = closet_fixture("CHAIN3_RANEY");
  const auto& u = raney.universe();
  CHECK(jointly_generated(raney.bracket(), raney.c(), all_subsets(u)));
  CHECK_FALSE(jointly_generated(raney.bracket(), raney.c(), SubsetFamily(u, {mask({0}), mask({1}), mask({2})})));
}
