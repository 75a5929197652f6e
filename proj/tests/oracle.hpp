#pragma once

// Brute-force reference implementations. These deliberately avoid the
// library's bitmask tricks: sets are sorted std::vector<int>, orders are
// boolean matrices, and every quantifier is a plain loop.

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::set<int>;
using Op = std::function<Set(const Set&)>;
using Matrix = std::vector<std::vector<bool>>;

inline std::vector<Set> powerset(int n) {
  std::vector<Set> out;
  for (long m = 0; m < (1L << n); ++m) {
    Set s;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1) s.insert(i);
    }
    out.push_back(s);
  }
  return out;
}

inline bool includes(const Set& big, const Set& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Set full(int n) {
  Set s;
  for (int i = 0; i < n; ++i) s.insert(i);
  return s;
}

inline Set down(const Matrix& leq, const Set& a) {
  Set out;
  for (int x = 0; x < static_cast<int>(leq.size()); ++x) {
    for (int y : a) {
      if (leq[x][y]) out.insert(x);
    }
  }
  return out;
}

inline Set up(const Matrix& leq, const Set& a) {
  Set out;
  for (int x = 0; x < static_cast<int>(leq.size()); ++x) {
    for (int y : a) {
      if (leq[y][x]) out.insert(x);
    }
  }
  return out;
}

inline Set upper_bounds(const Matrix& leq, const Set& a) {
  Set out;
  for (int x = 0; x < static_cast<int>(leq.size()); ++x) {
    bool ok = true;
    for (int y : a) ok = ok && leq[y][x];
    if (ok) out.insert(x);
  }
  return out;
}

inline Set lower_bounds(const Matrix& leq, const Set& a) {
  Set out;
  for (int x = 0; x < static_cast<int>(leq.size()); ++x) {
    bool ok = true;
    for (int y : a) ok = ok && leq[x][y];
    if (ok) out.insert(x);
  }
  return out;
}

// Relation as the set of pairs (x, y).
using Pairs = std::set<std::pair<int, int>>;

// x << y iff for every A, y in c(A) implies x in [A].
inline Pairs way_below(int n, const Op& bracket, const Op& c) {
  Pairs out;
  auto all = powerset(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool ok = true;
      for (const auto& a : all) {
        if (c(a).count(y) && !bracket(a).count(x)) {
          ok = false;
          break;
        }
      }
      if (ok) out.insert({x, y});
    }
  }
  return out;
}

inline Set below(const Pairs& wb, const Set& a) {
  Set out;
  for (auto [x, y] : wb) {
    if (a.count(y)) out.insert(x);
  }
  return out;
}

inline Set above(const Pairs& wb, const Set& a) {
  Set out;
  for (auto [x, y] : wb) {
    if (a.count(x)) out.insert(y);
  }
  return out;
}

inline std::vector<Set> fixed_points(int n, const Op& op) {
  std::vector<Set> out;
  for (const auto& a : powerset(n)) {
    if (op(a) == a) out.push_back(a);
  }
  return out;
}

// Smallest closed superset by intersecting every closed superset.
inline Set closure_by_intersection(int n, const Op& op, const Set& a) {
  Set out = full(n);
  for (const auto& f : fixed_points(n, op)) {
    if (!includes(f, a)) continue;
    Set meet;
    std::set_intersection(out.begin(), out.end(), f.begin(), f.end(), std::inserter(meet, meet.begin()));
    out = meet;
  }
  return out;
}

inline bool is_continuous(int n, const Pairs& wb, const Op& c) {
  for (int x = 0; x < n; ++x) {
    if (!c(below(wb, {x})).count(x)) return false;
  }
  return true;
}

inline bool is_interpolating(int n, const Pairs& wb) {
  for (auto [x, z] : wb) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y) found = wb.count({x, y}) && wb.count({y, z});
    if (!found) return false;
  }
  return true;
}

// Open sets form a topology: empty and full open, pairwise meets open.
inline bool is_topological(int n, const Op& c) {
  auto closed = fixed_points(n, c);
  std::set<Set> cl(closed.begin(), closed.end());
  if (!cl.count(Set{}) || !cl.count(full(n))) return false;
  for (const auto& f : closed) {
    for (const auto& g : closed) {
      Set u = f;
      u.insert(g.begin(), g.end());
      if (!cl.count(u)) return false;
    }
  }
  return true;
}

// Raney's relation by definition on a finite complete lattice given by leq:
// y <| x iff for every subset S with x <= sup S there is s in S with y <= s.
inline Pairs raney(const Matrix& leq) {
  int n = static_cast<int>(leq.size());
  auto sup = [&](const Set& s) {
    Set ub = upper_bounds(leq, s);
    for (int u : ub) {
      bool least = true;
      for (int v : ub) least = least && leq[u][v];
      if (least) return u;
    }
    return -1;
  };
  Pairs out;
  auto all = powerset(n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      for (const auto& s : all) {
        if (!leq[x][sup(s)]) continue;
        bool hit = false;
        for (int t : s) hit = hit || leq[y][t];
        if (!hit) {
          ok = false;
          break;
        }
      }
      if (ok) out.insert({y, x});
    }
  }
  return out;
}

}  // namespace oracle

namespace oracle {

// Constructors straight from their defining formulas.

inline Set dedekind_macneille(const Matrix& leq, const Set& a) { return lower_bounds(leq, upper_bounds(leq, a)); }

inline bool has_least(const Matrix& leq, const Set& s) {
  for (int u : s) {
    bool least = true;
    for (int v : s) least = least && leq[u][v];
    if (least) return true;
  }
  return false;
}

inline Set directed_sup(const Matrix& leq, const Set& a) {
  int n = static_cast<int>(leq.size());
  Set lower = down(leq, a);
  Set out;
  for (const auto& d : powerset(n)) {
    if (d.empty() || !includes(lower, d)) continue;
    bool directed = true;
    for (int x : d) {
      for (int y : d) {
        bool bound = false;
        for (int z : d) bound = bound || (leq[x][z] && leq[y][z]);
        directed = directed && bound;
      }
    }
    if (!directed || !has_least(leq, upper_bounds(leq, d))) continue;
    Set s = dedekind_macneille(leq, d);
    out.insert(s.begin(), s.end());
  }
  return out;
}

inline Set inflationary(const Matrix& leq, const std::vector<int>& m, const Set& a) {
  Set images;
  for (int x : down(leq, a)) images.insert(m[x]);
  return down(leq, images);
}

inline Set novak(const Matrix& p, const Matrix& q, const std::vector<int>& l, const std::vector<int>& r, const Set& a) {
  Set ra;
  for (int x : a) ra.insert(r[x]);
  Set images;
  for (int y : down(q, ra)) images.insert(l[y]);
  return down(p, images);
}

inline Set selfmap_family(const Matrix& leq, const std::vector<std::vector<int>>& phis, const Set& a) {
  Set lower = down(leq, a);
  Set out;
  for (int x = 0; x < static_cast<int>(leq.size()); ++x) {
    for (const auto& phi : phis) {
      if (lower.count(phi[x])) out.insert(x);
    }
  }
  return out;
}

inline Set compact_set(const Matrix& leq, const Set& k, const Set& a) {
  int n = static_cast<int>(leq.size());
  Set allowed = down(leq, a);
  for (int x = 0; x < n; ++x) {
    if (!k.count(x)) allowed.insert(x);
  }
  Set out;
  for (int x = 0; x < n; ++x) {
    if (includes(allowed, down(leq, {x}))) out.insert(x);
  }
  return out;
}

// Closed sets of the topology with every principal ideal as a subbasic
// closed set, grown to a fixed point under pairwise unions and meets.
inline std::set<Set> upper_topology_closed(const Matrix& leq) {
  int n = static_cast<int>(leq.size());
  std::set<Set> closed{Set{}, full(n)};
  for (int x = 0; x < n; ++x) closed.insert(down(leq, {x}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Set> cur(closed.begin(), closed.end());
    for (const auto& f : cur) {
      for (const auto& g : cur) {
        Set u = f;
        u.insert(g.begin(), g.end());
        Set m;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::inserter(m, m.begin()));
        grew = closed.insert(u).second || grew;
        grew = closed.insert(m).second || grew;
      }
    }
  }
  return closed;
}

inline Set closure_in(const std::set<Set>& closed, int n, const Set& a) {
  Set out = full(n);
  for (const auto& f : closed) {
    if (!includes(f, a)) continue;
    Set m;
    std::set_intersection(out.begin(), out.end(), f.begin(), f.end(), std::inserter(m, m.begin()));
    out = m;
  }
  return out;
}

inline Set generated(const Op& bracket, const Op& c, const std::vector<Set>& fam, const Set& a) {
  Set ba = bracket(a);
  Set out;
  for (const auto& d : fam) {
    if (!includes(ba, d)) continue;
    Set cd = c(d);
    out.insert(cd.begin(), cd.end());
  }
  return out;
}

// Every map {0..n-1} -> {0..m-1}.
inline std::vector<std::vector<int>> all_maps(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    out.push_back(f);
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline bool monotone(const Matrix& p, const Matrix& q, const std::vector<int>& f) {
  int n = static_cast<int>(p.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p[x][y] && !q[f[x]][f[y]]) return false;
    }
  }
  return true;
}

}  // namespace oracle

namespace oracle {

// Every assignment x -> fam[i_x] over D, kept when x <= y forces
// D_x inside D_y; every such union must be a member.
inline bool union_complete(const Matrix& leq, const std::vector<Set>& fam) {
  std::set<Set> members(fam.begin(), fam.end());
  for (const auto& d : fam) {
    std::vector<int> idx(d.begin(), d.end());
    auto choices = all_maps(static_cast<int>(idx.size()), static_cast<int>(fam.size()));
    for (const auto& pick : choices) {
      bool mono = true;
      for (std::size_t i = 0; i < idx.size() && mono; ++i) {
        for (std::size_t j = 0; j < idx.size() && mono; ++j) {
          if (leq[idx[i]][idx[j]]) mono = includes(fam[pick[j]], fam[pick[i]]);
        }
      }
      if (!mono) continue;
      Set u;
      for (std::size_t i = 0; i < idx.size(); ++i) u.insert(fam[pick[i]].begin(), fam[pick[i]].end());
      if (!members.count(u)) return false;
    }
  }
  return true;
}

// Complete distributivity from the brute-force Raney relation.
inline bool completely_distributive(const Matrix& leq) {
  auto rel = raney(leq);
  int n = static_cast<int>(leq.size());
  for (int x = 0; x < n; ++x) {
    Set below;
    for (auto [y, z] : rel) {
      if (z == x) below.insert(y);
    }
    Set ub = upper_bounds(leq, below);
    if (!ub.count(x)) return false;
    for (int u : ub) {
      if (!leq[x][u]) return false;
    }
  }
  return true;
}

}  // namespace oracle

namespace oracle {

inline std::vector<Set> irreducibles(int n, const Op& c) {
  auto closed = fixed_points(n, c);
  std::vector<Set> out;
  for (const auto& r : powerset(n)) {
    if (r.empty()) continue;
    bool ok = true;
    for (const auto& f : closed) {
      for (const auto& g : closed) {
        Set u = f;
        u.insert(g.begin(), g.end());
        if (includes(u, r) && !includes(f, r) && !includes(g, r)) ok = false;
      }
    }
    if (ok) out.push_back(r);
  }
  return out;
}

inline Set image(const std::vector<int>& f, const Set& a) {
  Set out;
  for (int x : a) out.insert(f[x]);
  return out;
}

inline Set preimage(const std::vector<int>& f, const Set& b) {
  Set out;
  for (int x = 0; x < static_cast<int>(f.size()); ++x) {
    if (b.count(f[x])) out.insert(x);
  }
  return out;
}

inline bool strictly_continuous(int n, const std::vector<int>& f, const Op& c, const Op& c2) {
  for (const auto& a : powerset(n)) {
    if (!includes(c2(image(f, a)), image(f, c(a)))) return false;
  }
  return true;
}

inline bool closure_continuous(int n2, const std::vector<int>& f, const Op& c, const Op& c2) {
  for (const auto& b : fixed_points(n2, c2)) {
    auto pre = preimage(f, b);
    if (c(pre) != pre) return false;
  }
  return true;
}

inline bool galois(const Matrix& p, const Matrix& p2, const std::vector<int>& phi, const std::vector<int>& psi) {
  for (int x = 0; x < static_cast<int>(p.size()); ++x) {
    for (int y = 0; y < static_cast<int>(p2.size()); ++y) {
      if (p2[phi[x]][y] != p[x][psi[y]]) return false;
    }
  }
  return true;
}

}  // namespace oracle
