#include "closetlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <sstream>
#include <mutex>
#include <thread>
#include <tuple>

#include "closetlab/constructors.hpp"
#include "closetlab/errors.hpp"

namespace closetlab {

namespace {

using Rng = std::mt19937_64;

// Modulo draws keep the stream identical across standard libraries, which
// the distribution classes do not promise.
unsigned draw(Rng& rng, unsigned bound) { return static_cast<unsigned>(rng() % bound); }

std::vector<unsigned> permutation(Rng& rng, unsigned n) {
  std::vector<unsigned> p(n);
  for (unsigned i = 0; i < n; ++i) p[i] = i;
  for (unsigned i = n; i > 1; --i) std::swap(p[i - 1], p[draw(rng, i)]);
  return p;
}

Subset random_subset(Rng& rng, unsigned n) {
  return Subset(static_cast<Subset::Bits>(rng() & ((std::uint64_t{1} << n) - 1)));
}

bool poset_only(const std::string& kind) { return kind == "directed_sup" || kind == "upper_topology"; }

// Randomized depth-first search for a monotone p -> q map with f(x) drawn
// from allowed(x, .).
std::optional<std::vector<unsigned>> random_monotone(Rng& rng, const Qoset& p, const Qoset& q,
                                                     const std::function<bool(unsigned, unsigned)>& allowed) {
  unsigned n = p.size();
  auto order = permutation(rng, n);
  std::vector<unsigned> f(n, 0);
  long budget = 20000;
  std::function<bool(unsigned)> dfs = [&](unsigned i) -> bool {
    if (i == n) return true;
    unsigned x = order[i];
    for (unsigned y : permutation(rng, q.size())) {
      if (!allowed(x, y)) continue;
      bool ok = true;
      for (unsigned k = 0; k < i && ok; ++k) {
        unsigned z = order[k];
        if (p.leq(z, x) && !q.leq(f[z], y)) ok = false;
        if (p.leq(x, z) && !q.leq(y, f[z])) ok = false;
      }
      if (!ok) continue;
      f[x] = y;
      if (dfs(i + 1)) return true;
      if (--budget <= 0) return false;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return f;
}

std::vector<unsigned> must(std::optional<std::vector<unsigned>> f) {
  if (!f) throw InvalidStructure("monotone map search ran out of budget");
  return std::move(*f);
}

std::vector<unsigned> random_map(Rng& rng, unsigned n, unsigned m) {
  std::vector<unsigned> f(n);
  for (auto& y : f) y = draw(rng, m);
  return f;
}

Json map_doc(const Universe& from, const Universe& to, const std::vector<unsigned>& f) {
  Json out = Json::object();
  for (unsigned x = 0; x < from.size(); ++x) out[from.name(x)] = to.name(f[x]);
  return out;
}

Json order_doc(const Qoset& q) {
  Json out = Json::array();
  const auto& u = q.universe();
  for (unsigned x = 0; x < u.size(); ++x) {
    for (unsigned y = 0; y < u.size(); ++y) {
      if (x != y && q.leq(x, y)) out.push_back(Json::array({u.name(x), u.name(y)}));
    }
  }
  return out;
}

Json names_of(const Universe& u, Subset s) {
  Json out = Json::array();
  for (unsigned x : s) out.push_back(u.name(x));
  return out;
}

Json table_doc(const SetOperator& op) {
  Json entries = Json::object();
  for (std::size_t m = 0; m < op.universe().subset_count(); ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    entries[mask_to_hex(a)] = mask_to_hex(op(a));
  }
  return Json{{"kind", "table"}, {"entries", entries}};
}

std::vector<unsigned> inflationary_map(Rng& rng, const Qoset& q) {
  return must(random_monotone(rng, q, q, [&](unsigned x, unsigned y) { return q.leq(x, y); }));
}

// The extra conditions of strict Novak mode: r reflects the order, and
// r(l(y)) <= y everywhere or r is onto.
bool strict_ok(const Qoset& p, const Qoset& q, const std::vector<unsigned>& l, const std::vector<unsigned>& r) {
  for (unsigned x = 0; x < p.size(); ++x) {
    for (unsigned y = 0; y < p.size(); ++y) {
      if (q.leq(r[x], r[y]) && !p.leq(x, y)) return false;
    }
  }
  bool counit = true;
  Subset hit;
  for (unsigned y = 0; y < q.size(); ++y) counit = counit && q.leq(r[l[y]], y);
  for (unsigned x = 0; x < p.size(); ++x) hit = hit.with(r[x]);
  return counit || hit.size() == q.size();
}

Json c_doc(Rng& rng, const Qoset& q, const std::string& kind) {
  const auto& u = q.universe();
  unsigned n = q.size();
  if (kind == "alexandrov" || kind == "dedekind_macneille" || kind == "directed_sup" || kind == "upper_topology") {
    return Json{{"kind", kind}};
  }
  if (kind == "inflationary") return Json{{"kind", kind}, {"map", map_doc(u, u, inflationary_map(rng, q))}};
  if (kind == "novak") {
    unsigned k = 1 + draw(rng, n);
    Qoset small = random_qoset(rng, k);
    std::vector<std::string> qnames;
    for (unsigned i = 0; i < k; ++i) qnames.push_back("q" + std::to_string(i));
    Universe qu(qnames);
    Qoset qq(qu, [&] {
      Relation rel(qu);
      for (unsigned a = 0; a < k; ++a) {
        for (unsigned b = 0; b < k; ++b) rel.set(a, b, small.leq(a, b));
      }
      return rel;
    }());
    auto r = must(random_monotone(rng, q, qq, [](unsigned, unsigned) { return true; }));
    auto l = random_monotone(rng, qq, q, [&](unsigned a, unsigned y) {
      for (unsigned x = 0; x < n; ++x) {
        if (r[x] == a && !q.leq(x, y)) return false;
      }
      return true;
    });
    if (!l) throw InvalidStructure("no left map for the drawn right map");
    return Json{{"kind", kind},
                {"q_elements", qnames},
                {"q_order", order_doc(qq)},
                {"l", map_doc(qu, u, *l)},
                {"r", map_doc(u, qu, r)},
                {"strict", strict_ok(q, qq, *l, r) && draw(rng, 2) == 0}};
  }
  if (kind == "selfmap_family") {
    Json maps = Json::array();
    auto extensive = [&](unsigned x, unsigned y) { return q.leq(y, x); };
    maps.push_back(map_doc(u, u, must(random_monotone(rng, q, q, extensive))));
    unsigned extra = draw(rng, 3);
    for (unsigned i = 0; i < extra; ++i) {
      maps.push_back(map_doc(u, u, must(random_monotone(rng, q, q, [](unsigned, unsigned) { return true; }))));
    }
    return Json{{"kind", kind}, {"maps", maps}};
  }
  if (kind == "compact_set") {
    Subset k = random_subset(rng, n);
    if (k.empty()) k = Subset::singleton(draw(rng, n));
    return Json{{"kind", kind}, {"K", names_of(u, k)}};
  }
  if (kind == "generated") {
    static const std::vector<std::string> bases{"alexandrov", "dedekind_macneille", "inflationary", "compact_set"};
    Json family = Json::array();
    if (draw(rng, 2) == 0) family.push_back(Json::array());
    for (unsigned x = 0; x < n; ++x) family.push_back(Json::array({u.name(x)}));
    unsigned extra = draw(rng, 4);
    for (unsigned i = 0; i < extra; ++i) family.push_back(names_of(u, random_subset(rng, n)));
    return Json{{"kind", kind}, {"base", c_doc(rng, q, bases[draw(rng, bases.size())])}, {"family", family}};
  }
  throw Error("unknown operator kind '" + kind + "'");
}

// Right map psi with x <= psi(y) iff f(x) <= y, when one exists.
std::optional<std::vector<unsigned>> upper_adjoint(const Qoset& p, const Qoset& q, const std::vector<unsigned>& f) {
  std::vector<unsigned> psi(q.size());
  for (unsigned y = 0; y < q.size(); ++y) {
    Subset below;
    for (unsigned x = 0; x < p.size(); ++x) {
      if (q.leq(f[x], y)) below = below.with(x);
    }
    std::optional<unsigned> top;
    for (unsigned x : below) {
      if (p.down(x) == below) top = x;
    }
    if (!top) return std::nullopt;
    psi[y] = *top;
  }
  return psi;
}

Json maps_doc(Rng& rng, const Qoset& q) {
  const auto& u = q.universe();
  unsigned n = q.size();
  std::optional<Qoset> target;
  Json target_doc;
  if (draw(rng, 2) == 0) {
    static const std::vector<std::string> simple{"alexandrov", "dedekind_macneille", "inflationary", "compact_set"};
    target = random_qoset(rng, 1 + draw(rng, n));
    target_doc = random_document(rng, *target, simple[draw(rng, simple.size())], false);
  }
  const Qoset& t = target ? *target : q;
  std::vector<unsigned> f;
  if (draw(rng, 3) != 0) {
    f = must(random_monotone(rng, q, t, [](unsigned, unsigned) { return true; }));
  } else {
    f = random_map(rng, n, t.size());
  }
  std::vector<unsigned> right;
  auto adj = upper_adjoint(q, t, f);
  if (adj && draw(rng, 4) != 0) {
    right = *adj;
  } else {
    right = random_map(rng, t.size(), n);
  }
  Json entry{{"map", map_doc(u, t.universe(), f)}};
  if (target) entry["target"] = target_doc;
  entry["right"] = map_doc(t.universe(), u, right);
  return Json{{"f", entry}};
}

unsigned compress(unsigned long bits, unsigned e) {
  unsigned long low = bits & ((1ul << e) - 1);
  return static_cast<unsigned>(low | ((bits >> (e + 1)) << e));
}

Json restrict_table(const Json& table, unsigned e) {
  Json entries = Json::object();
  for (auto it = table["entries"].begin(); it != table["entries"].end(); ++it) {
    unsigned long key = std::stoul(it.key(), nullptr, 16);
    if (key & (1ul << e)) continue;
    unsigned long value = std::stoul(it.value().get<std::string>(), nullptr, 16);
    entries[mask_to_hex(Subset(compress(key, e)))] = mask_to_hex(Subset(compress(value, e)));
  }
  return Json{{"kind", "table"}, {"entries", entries}};
}

// Drops `name` from the keys of a map; false when it is also an image.
bool drop_key(Json& map, const std::string& name, bool check_values) {
  map.erase(name);
  if (check_values) {
    for (const auto& v : map) {
      if (v == name) return false;
    }
  }
  return true;
}

bool has_value(const Json& map, const std::string& name) {
  for (const auto& v : map) {
    if (v == name) return true;
  }
  return false;
}

bool restrict_c(Json& c, const std::string& name, unsigned e) {
  std::string kind = c["kind"];
  if (kind == "inflationary") return drop_key(c["map"], name, true);
  if (kind == "selfmap_family") {
    for (auto& m : c["maps"]) {
      if (!drop_key(m, name, true)) return false;
    }
    return true;
  }
  if (kind == "novak") {
    c["r"].erase(name);
    return !has_value(c["l"], name);
  }
  if (kind == "compact_set") {
    Json k = Json::array();
    for (const auto& x : c["K"]) {
      if (x != name) k.push_back(x);
    }
    c["K"] = k;
    return !k.empty();
  }
  if (kind == "generated") {
    for (auto& d : c["family"]) {
      Json kept = Json::array();
      for (const auto& x : d) {
        if (x != name) kept.push_back(x);
      }
      d = kept;
    }
    return restrict_c(c["base"], name, e);
  }
  if (kind == "table") c = restrict_table(c, e);
  return true;
}

struct Job {
  std::uint64_t index = 0;
  unsigned size = 0;
  std::string kind;
  std::optional<Qoset> order;
};

struct JobResult {
  bool skipped = false;
  std::vector<TargetTally> tallies;
  std::vector<Finding> findings;
};

Rng job_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

bool still_inconsistent(const Json& doc, const std::string& target, const std::string& check,
                        const AnalysisOptions& options) {
  try {
    auto space = parse_space(doc);
    for (const auto& entry : run_check(target, space, options)) {
      if (entry.report.check == check && entry.report.inconsistent()) return true;
    }
  } catch (const Error&) {
  }
  return false;
}

Json minimize(Json doc, const std::string& target, const std::string& check, const AnalysisOptions& options) {
  if (doc.contains("maps")) {
    Json bare = doc;
    bare.erase("maps");
    if (still_inconsistent(bare, target, check, options)) doc = std::move(bare);
  }
  bool progress = true;
  while (progress && doc["elements"].size() > 1) {
    progress = false;
    for (const auto& el : doc["elements"]) {
      auto smaller = delete_element(doc, el.get<std::string>());
      if (smaller && still_inconsistent(*smaller, target, check, options)) {
        doc = std::move(*smaller);
        progress = true;
        break;
      }
    }
  }
  return doc;
}

JobResult run_job(const Job& job, const SearchConfig& config, const std::vector<std::string>& targets) {
  JobResult out;
  out.tallies.resize(targets.size());
  Rng rng = job_rng(config.seed, job.index);
  std::optional<ParsedSpace> space;
  Json doc;
  for (int attempt = 0; attempt < 20 && !space; ++attempt) {
    try {
      Qoset q = job.order ? *job.order : random_qoset(rng, job.size, poset_only(job.kind));
      doc = random_document(rng, q, job.kind);
      space = parse_space(doc);
    } catch (const InvalidStructure&) {
    }
  }
  if (!space) {
    out.skipped = true;
    return out;
  }
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for (const auto& entry : run_check(targets[t], *space, config.options)) {
      const Report& r = entry.report;
      auto& tally = out.tallies[t];
      if (r.verdict == Verdict::inconsistent) {
        ++tally.inconsistent;
        Finding f{targets[t], r.check, job.index, job.kind, r.note, doc};
        if (config.minimize) f.structure = minimize(doc, targets[t], r.check, config.options);
        f.structure["name"] = "finding-" + std::to_string(job.index);
        out.findings.push_back(std::move(f));
      } else if (r.verdict == Verdict::hypothesis_not_met) {
        ++tally.hypothesis_not_met;
      } else {
        ++tally.holds;
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& operator_kinds() {
  static const std::vector<std::string> kinds{"alexandrov",   "dedekind_macneille", "directed_sup", "upper_topology",
                                              "inflationary", "novak",              "selfmap_family", "compact_set",
                                              "generated",    "dm_bracket"};
  return kinds;
}

Qoset random_qoset(Rng& rng, unsigned n, bool poset_only) {
  Universe u = Universe::indexed(n);
  auto perm = permutation(rng, n);
  unsigned density = 2 + draw(rng, 6);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      if (draw(rng, 10) < density) pairs.emplace_back(perm[i], perm[j]);
    }
  }
  if (!poset_only && n >= 2 && draw(rng, 4) == 0) {
    unsigned a = draw(rng, n);
    unsigned b = (a + 1 + draw(rng, n - 1)) % n;
    pairs.emplace_back(a, b);
    pairs.emplace_back(b, a);
  }
  return qoset_from_index_pairs(u, pairs);
}

std::vector<Qoset> all_qosets(unsigned n) {
  if (n > kExhaustiveMaxSize) throw CapError("exhaustive enumeration is limited to " +
                                             std::to_string(kExhaustiveMaxSize) + " elements");
  Universe u = Universe::indexed(n);
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      if (x != y) slots.emplace_back(x, y);
    }
  }
  std::vector<Qoset> out;
  std::vector<std::uint32_t> rows(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    for (unsigned x = 0; x < n; ++x) rows[x] = 1u << x;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1) rows[slots[s].first] |= 1u << slots[s].second;
    }
    bool transitive = true;
    for (unsigned x = 0; x < n && transitive; ++x) {
      for (unsigned y = 0; y < n && transitive; ++y) {
        if ((rows[x] >> y & 1) && (rows[y] & ~rows[x])) transitive = false;
      }
    }
    if (!transitive) continue;
    Relation rel(u);
    for (unsigned x = 0; x < n; ++x) {
      for (unsigned y = 0; y < n; ++y) rel.set(x, y, rows[x] >> y & 1);
    }
    out.emplace_back(u, rel);
  }
  return out;
}

Json random_document(Rng& rng, const Qoset& q, const std::string& kind, bool with_maps) {
  const auto& u = q.universe();
  Json doc{{"elements", u.names()}, {"order", order_doc(q)}};
  if (kind == "dm_bracket") {
    auto dm = dedekind_macneille(q);
    auto m = inflationary_map(rng, q);
    SpaceMap mm(u, u, m);
    auto c = SetOperator::from_rule(u, "dm_bracket", [dm, mm](Subset a) { return dm(mm.image(dm(a))); });
    doc["bracket"] = table_doc(dm);
    doc["c"] = table_doc(c);
  } else {
    doc["bracket"] = Json{{"kind", "alexandrov"}};
    doc["c"] = c_doc(rng, q, kind);
  }
  if (with_maps && draw(rng, 3) != 0) doc["maps"] = maps_doc(rng, q);
  return doc;
}

std::optional<Json> delete_element(const Json& doc, const std::string& element) {
  Json out = doc;
  const Json& elements = doc["elements"];
  auto pos = std::find(elements.begin(), elements.end(), element);
  if (pos == elements.end() || elements.size() < 2) return std::nullopt;
  auto e = static_cast<unsigned>(pos - elements.begin());
  out["elements"].erase(out["elements"].begin() + e);
  // Close the order first so that pairs routed through the deleted element
  // survive.
  std::vector<std::string> names = doc["elements"].get<std::vector<std::string>>();
  std::size_t n = names.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  auto index = [&](const Json& name) {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), name) - names.begin());
  };
  if (doc.contains("order")) {
    for (const auto& p : doc["order"]) leq[index(p[0])][index(p[1])] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  Json order = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && i != e && j != e && leq[i][j]) order.push_back({names[i], names[j]});
    }
  }
  out["order"] = order;
  if (doc.contains("bracket") && doc["bracket"]["kind"] == "table") out["bracket"] = restrict_table(out["bracket"], e);
  if (!restrict_c(out["c"], element, e)) return std::nullopt;
  if (out.contains("maps")) {
    for (auto& [name, m] : out["maps"].items()) {
      bool same = !m.contains("target");
      if (!drop_key(m["map"], element, same)) return std::nullopt;
      if (m.contains("right")) {
        if (same) m["right"].erase(element);
        if (has_value(m["right"], element)) return std::nullopt;
      }
    }
  }
  return out;
}

std::uint64_t SearchResult::inconsistencies() const {
  std::uint64_t total = 0;
  for (const auto& [name, t] : tallies) total += t.inconsistent;
  return total;
}

SearchResult search(const SearchConfig& config) {
  auto start = std::chrono::steady_clock::now();
  if (config.min_size < 1 || config.min_size > config.max_size) {
    throw Error("size range must satisfy 1 <= min <= max");
  }
  if (config.max_size > max_elements()) {
    throw CapError("size " + std::to_string(config.max_size) + " exceeds the element cap of " +
                   std::to_string(max_elements()));
  }
  if (config.exhaustive && config.max_size > kExhaustiveMaxSize) {
    throw CapError("exhaustive search is limited to " + std::to_string(kExhaustiveMaxSize) + " elements");
  }
  std::vector<std::string> kinds = config.kinds.empty() ? operator_kinds() : config.kinds;
  for (const auto& k : kinds) {
    if (std::find(operator_kinds().begin(), operator_kinds().end(), k) == operator_kinds().end()) {
      throw Error("unknown operator kind '" + k + "'");
    }
  }
  std::vector<std::string> targets = config.targets.empty() ? theorem_checker_names() : config.targets;
  for (const auto& t : targets) {
    if (!is_checker_name(t)) throw Error("unknown checker '" + t + "'");
  }

  std::vector<Job> jobs;
  if (config.exhaustive) {
    for (unsigned n = config.min_size; n <= config.max_size; ++n) {
      for (const auto& q : all_qosets(n)) {
        for (const auto& k : kinds) {
          if (poset_only(k) && !q.is_poset()) continue;
          jobs.push_back({jobs.size(), n, k, q});
        }
      }
    }
  } else {
    Rng sizes = job_rng(config.seed, ~std::uint64_t{0});
    unsigned span = config.max_size - config.min_size + 1;
    for (std::uint64_t i = 0; i < config.samples; ++i) {
      jobs.push_back({i, config.min_size + draw(sizes, span), kinds[i % kinds.size()], std::nullopt});
    }
  }

  std::vector<JobResult> results(jobs.size());
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = run_job(jobs[i], config, targets);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SearchResult out;
  out.config = config;
  out.config.kinds = kinds;
  out.config.targets = targets;
  for (const auto& t : targets) out.tallies.push_back({t, {}});
  for (auto& r : results) {
    if (r.skipped) {
      ++out.skipped;
      continue;
    }
    ++out.structures;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      out.tallies[t].second.holds += r.tallies[t].holds;
      out.tallies[t].second.hypothesis_not_met += r.tallies[t].hypothesis_not_met;
      out.tallies[t].second.inconsistent += r.tallies[t].inconsistent;
    }
    for (auto& f : r.findings) out.findings.push_back(std::move(f));
  }
  std::sort(out.findings.begin(), out.findings.end(), [](const Finding& a, const Finding& b) {
    return std::tie(a.target, a.sample, a.check) < std::tie(b.target, b.sample, b.check);
  });
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Json search_json(const SearchResult& result, bool timing) {
  const auto& c = result.config;
  Json config{{"min_size", c.min_size}, {"max_size", c.max_size}, {"kinds", c.kinds},    {"targets", c.targets},
              {"samples", c.samples},   {"exhaustive", c.exhaustive}, {"seed", c.seed}, {"minimize", c.minimize}};
  Json tallies = Json::object();
  for (const auto& [name, t] : result.tallies) {
    tallies[name] =
        Json{{"holds", t.holds}, {"hypothesis-not-met", t.hypothesis_not_met}, {"INCONSISTENT", t.inconsistent}};
  }
  Json findings = Json::array();
  for (const auto& f : result.findings) {
    findings.push_back(Json{{"target", f.target},
                            {"check", f.check},
                            {"sample", f.sample},
                            {"kind", f.kind},
                            {"note", f.note},
                            {"structure", f.structure}});
  }
  Json out{{"config", config},
           {"structures", result.structures},
           {"skipped", result.skipped},
           {"inconsistencies", result.inconsistencies()},
           {"targets", tallies},
           {"findings", findings}};
  if (timing) out["seconds"] = result.seconds;
  return out;
}

std::string search_text(const SearchResult& result, bool timing) {
  std::ostringstream out;
  const auto& c = result.config;
  out << "search " << (c.exhaustive ? "exhaustive" : "random") << " sizes " << c.min_size << ".." << c.max_size
      << " seed " << c.seed << "\n";
  out << "structures: " << result.structures << " (skipped " << result.skipped << ")\n";
  for (const auto& [name, t] : result.tallies) {
    out << "  " << name << ": holds " << t.holds << ", hypothesis-not-met " << t.hypothesis_not_met
        << ", INCONSISTENT " << t.inconsistent << "\n";
  }
  out << "inconsistencies: " << result.inconsistencies() << "\n";
  for (const auto& f : result.findings) {
    out << "finding " << f.check << " (sample " << f.sample << ", " << f.kind << "): " << f.note << "\n";
    out << "  " << f.structure.dump() << "\n";
  }
  if (timing) out << "seconds: " << result.seconds << "\n";
  return out.str();
}

}  // namespace closetlab
