#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "closetlab/analysis.hpp"
#include "closetlab/order.hpp"
#include "closetlab/structure_io.hpp"

namespace closetlab {

// Largest size accepted by exhaustive enumeration.
inline constexpr unsigned kExhaustiveMaxSize = 5;

// Constructor families the generator draws from. "dm_bracket" pairs a
// Dedekind-MacNeille bracket with c(A) = DM(m[DM(A)]) for a monotone
// inflationary m, written out as tables.
const std::vector<std::string>& operator_kinds();

struct SearchConfig {
  unsigned min_size = 4;
  unsigned max_size = 4;
  std::vector<std::string> kinds;    // empty: all
  std::vector<std::string> targets;  // empty: every theorem checker
  std::uint64_t samples = 100;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: hardware concurrency
  bool minimize = true;
  AnalysisOptions options;
};

struct Finding {
  std::string target;
  std::string check;
  std::uint64_t sample = 0;
  std::string kind;
  std::string note;
  Json structure;
};

struct TargetTally {
  std::uint64_t holds = 0;
  std::uint64_t hypothesis_not_met = 0;
  std::uint64_t inconsistent = 0;
};

struct SearchResult {
  SearchConfig config;
  std::uint64_t structures = 0;
  // Draws where no valid structure came out after all retries.
  std::uint64_t skipped = 0;
  std::vector<std::pair<std::string, TargetTally>> tallies;
  std::vector<Finding> findings;
  double seconds = 0;

  std::uint64_t inconsistencies() const;
};

// Throws CapError for sizes over the element cap, or over
// kExhaustiveMaxSize in exhaustive mode, and Error for unknown kinds or
// targets.
SearchResult search(const SearchConfig& config);

Json search_json(const SearchResult& result, bool timing = false);
std::string search_text(const SearchResult& result, bool timing = false);

// Generators, exposed for tests.
Qoset random_qoset(std::mt19937_64& rng, unsigned n, bool poset_only = false);
// Every reflexive transitive relation on n labelled points.
std::vector<Qoset> all_qosets(unsigned n);
// Structure document of the given kind over q, with random parameters and
// random maps; throws InvalidStructure when a draw happens to be invalid.
Json random_document(std::mt19937_64& rng, const Qoset& q, const std::string& kind, bool with_maps = true);
// Document with the named element removed, or nullopt when some map would
// lose its image.
std::optional<Json> delete_element(const Json& doc, const std::string& element);

}  // namespace closetlab
