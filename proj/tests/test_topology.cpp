#include <doctest.h>

#include <closetlab/constructors.hpp>
#include <closetlab/core_ops.hpp>
#include <closetlab/fixtures.hpp>
#include <closetlab/topology.hpp>
#include <closetlab/waybelow.hpp>

#include "support.hpp"

using namespace closetlab;
using support::mask;

TEST_CASE("topology examples") {
  for (const auto& name : order_fixture_names()) CHECK(is_topological(alexandrov(order_fixture(name))).topological);
  CHECK(is_topological(closet_fixture("CHAIN3_SHIFT").c()).topological);
  auto raney = is_topological(closet_fixture("CHAIN3_RANEY").c());
  CHECK_FALSE(raney.topological);
  CHECK_FALSE(raney.kuratowski);
  CHECK(raney.reason.find("c(empty)") == 0);
}

TEST_CASE("irreducible subsets") {
  auto shift = closet_fixture("CHAIN3_SHIFT");
  CHECK(irreducible_subsets(shift.c()).size() == 7);
  for (const auto& name : order_fixture_names()) {
    auto q = order_fixture(name);
    auto irr = irreducible_subsets(alexandrov(q));
    // Over a poset these are exactly the nonempty directed subsets.
    for (std::size_t m = 1; m < q.universe().subset_count(); ++m) {
      Subset s(static_cast<Subset::Bits>(m));
      bool directed = true;
      for (unsigned x : s) {
        for (unsigned y : s) directed = directed && (q.up(x) & q.up(y)).intersects(s);
      }
      CAPTURE(name);
      CHECK(irr.contains(s) == directed);
    }
    for (unsigned x = 0; x < q.size(); ++x) CHECK(irr.contains(Subset::singleton(x)));
  }
  auto r = prop_topological(shift);
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.get("c_topological") == true);
  CHECK(r.get("generated_by_irreducibles") == true);
}

TEST_CASE("topology and irreducibles agree with the oracle") {
  auto closets = support::sampled_closets(4, 1, 3);
  REQUIRE(closets.size() > 300);
  for (const auto& ec : closets) {
    int n = static_cast<int>(ec.size());
    auto c = support::op_of(ec.c());
    auto t = is_topological(ec.c());
    CHECK(t.topological == t.kuratowski);
    CHECK(t.topological == oracle::is_topological(n, c));
    std::set<oracle::Set> expected;
    for (const auto& r : oracle::irreducibles(n, c)) expected.insert(r);
    std::set<oracle::Set> got;
    auto irr = irreducible_subsets(ec.c());
    for (auto r : irr) got.insert(support::to_set(r));
    CHECK(got == expected);
    // c(R) is irreducible whenever R is.
    for (auto r : irr) CHECK(irr.contains(ec.c()(r)));
    CHECK_FALSE(prop_topological(ec).inconsistent());
    CHECK_FALSE(topology_agreement(ec.c()).inconsistent());
  }
}

TEST_CASE("literal and reduced topology tests agree above the pair cap") {
  // 11 elements exercises the single-point reductions.
  Universe u = Universe::indexed(11);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i + 2 < 11; ++i) pairs.emplace_back(i, i + 2);
  auto q = qoset_from_index_pairs(u, pairs);
  auto alex = alexandrov(q);
  auto ta = is_topological(alex);
  CHECK(ta.topological);
  CHECK(ta.kuratowski);
  auto dm = is_topological(dedekind_macneille(q));
  CHECK(dm.topological == dm.kuratowski);
  auto m = inflationary(q, SpaceMap(u, u, [] {
                          std::vector<unsigned> v(11);
                          for (unsigned i = 0; i < 11; ++i) v[i] = i + 2 < 11 ? i + 2 : i;
                          return v;
                        }()));
  auto tm = is_topological(m);
  CHECK(tm.topological == tm.kuratowski);
}
