#pragma once

#include <closetlab/closet.hpp>
#include <closetlab/order.hpp>
#include <closetlab/relation.hpp>
#include <closetlab/set_operator.hpp>

#include "oracle.hpp"

namespace support {

using namespace closetlab;

inline oracle::Set to_set(Subset s) {
  oracle::Set out;
  for (unsigned i : s) out.insert(static_cast<int>(i));
  return out;
}

inline Subset from_set(const oracle::Set& s) {
  Subset out;
  for (int i : s) out = out.with(static_cast<unsigned>(i));
  return out;
}

inline oracle::Op op_of(const SetOperator& op) {
  return [op](const oracle::Set& a) { return to_set(op(from_set(a))); };
}

inline oracle::Matrix matrix_of(const Qoset& q) {
  oracle::Matrix m(q.size(), std::vector<bool>(q.size()));
  for (unsigned x = 0; x < q.size(); ++x) {
    for (unsigned y = 0; y < q.size(); ++y) m[x][y] = q.leq(x, y);
  }
  return m;
}

inline oracle::Pairs pairs_of(const Relation& r) {
  oracle::Pairs out;
  for (auto [x, y] : r.pairs()) out.insert({static_cast<int>(x), static_cast<int>(y)});
  return out;
}

inline Subset mask(std::initializer_list<unsigned> idx) {
  Subset out;
  for (unsigned i : idx) out = out.with(i);
  return out;
}

}  // namespace support

namespace support {

inline SpaceMap map_of(const Universe& from, const Universe& to, const std::vector<int>& f) {
  return SpaceMap(from, to, std::vector<unsigned>(f.begin(), f.end()));
}

// Index of the first subset where op and the oracle disagree, or -1.
inline long first_mismatch(const SetOperator& op, const oracle::Op& expected) {
  const auto& u = op.universe();
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    if (to_set(op(a)) != expected(to_set(a))) return static_cast<long>(m);
  }
  return -1;
}

}  // namespace support

#include <closetlab/errors.hpp>
#include <closetlab/search.hpp>

namespace support {

// Closets over every qoset of each size up to max_n, per_order draws each,
// with kinds and parameters from a fixed seed. Invalid draws are dropped.
inline std::vector<EnrichedCloset> sampled_closets(unsigned max_n, int per_order, std::uint64_t seed = 2024) {
  std::vector<EnrichedCloset> out;
  std::mt19937_64 rng(seed);
  for (unsigned n = 1; n <= max_n; ++n) {
    for (const auto& q : all_qosets(n)) {
      for (int i = 0; i < per_order; ++i) {
        const auto& kind = operator_kinds()[rng() % operator_kinds().size()];
        if ((kind == "directed_sup" || kind == "upper_topology") && !q.is_poset()) continue;
        try {
          out.push_back(*parse_space(random_document(rng, q, kind, false)).closet);
        } catch (const InvalidStructure&) {
        }
      }
    }
  }
  return out;
}

// Every labelled lattice with at most max_n elements.
inline std::vector<Qoset> small_lattices(unsigned max_n) {
  std::vector<Qoset> out;
  for (unsigned n = 1; n <= max_n; ++n) {
    for (auto& q : all_qosets(n)) {
      if (q.is_poset() && q.is_complete_lattice()) out.push_back(q);
    }
  }
  return out;
}

inline std::vector<int> images_of(const SpaceMap& f) { return std::vector<int>(f.images().begin(), f.images().end()); }

}  // namespace support
