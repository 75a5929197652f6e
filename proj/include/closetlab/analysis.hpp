#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "closetlab/interpolation.hpp"
#include "closetlab/report.hpp"
#include "closetlab/structure_io.hpp"
#include "closetlab/waybelow.hpp"

namespace closetlab {

struct AnalysisOptions {
  unsigned galois_cap = kDefaultGaloisCap;
  std::uint64_t union_cap = kDefaultUnionCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
};

struct CheckEntry {
  std::string module;
  Report report;
};

struct AnalysisReport {
  std::string name;
  unsigned n = 0;
  std::vector<std::string> elements;
  std::string bracket_kind;
  std::string c_kind;
  std::vector<CheckEntry> checks;
  double seconds = 0;

  bool inconsistent() const;
};

// Checker names accepted by run_check, in the order analyze runs them.
const std::vector<std::string>& checker_names();
bool is_checker_name(const std::string& name);
// The checkers that test an implication, as opposed to plain computations.
const std::vector<std::string>& theorem_checker_names();

// Map checkers run once per map in the file. Without maps they run on the
// identity of the structure, with the identity as its right adjoint.
std::vector<CheckEntry> run_check(const std::string& name, const ParsedSpace& space,
                                  const AnalysisOptions& options = {});

AnalysisReport analyze(const ParsedSpace& space, const AnalysisOptions& options = {});
AnalysisReport analyze_only(const ParsedSpace& space, const std::string& check, const AnalysisOptions& options = {});

// Machine format. Timing is left out unless asked for so that output is
// reproducible byte for byte.
Json report_json(const AnalysisReport& report, bool timing = false);
std::string report_text(const AnalysisReport& report, bool timing = false);

Json way_below_json(const ParsedSpace& space);
std::string way_below_text(const ParsedSpace& space);

// "{(a,b),(c,d)}" with element names.
std::string format_pairs(const Universe& u, const std::vector<std::pair<unsigned, unsigned>>& pairs);

}  // namespace closetlab
