#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "closetlab/analysis.hpp"
#include "closetlab/errors.hpp"
#include "closetlab/fixtures.hpp"
#include "closetlab/search.hpp"
#include "closetlab/structure_io.hpp"

using namespace closetlab;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kInconsistent = 3 };

struct Globals {
  std::string format = "text";
  unsigned max_n = 0;
  std::uint64_t seed = 0;
  unsigned galois_cap = kDefaultGaloisCap;
  bool timing = false;
};

// A path wins over a fixture of the same name.
ParsedSpace load(const std::string& input) {
  if (std::filesystem::exists(input)) return parse_space_file(input);
  if (is_fixture_name(input)) return parse_space(Json{{"fixture", input}});
  throw ParseError("'" + input + "' is neither a file nor a fixture name");
}

void emit(const Globals& g, const Json& json, const std::string& text) {
  if (g.format == "json") {
    std::cout << json.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_analysis(const Globals& g, const std::string& input, const std::string& check) {
  AnalysisOptions options;
  options.galois_cap = g.galois_cap;
  auto space = load(input);
  auto report = check.empty() ? analyze(space, options) : analyze_only(space, check, options);
  emit(g, report_json(report, g.timing), report_text(report, g.timing));
  return report.inconsistent() ? kInconsistent : kOk;
}

int list_fixtures(const Globals& g) {
  Json out = Json::object();
  std::string text;
  for (const auto& name : closet_fixture_names()) {
    out[name] = fixture_document(name);
    text += name + "\n";
  }
  for (const auto& name : order_fixture_names()) {
    out[name] = fixture_document(name);
    text += name + " (order, alexandrov c)\n";
  }
  emit(g, out, text);
  return kOk;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      auto comma = item.find(',', start);
      if (comma == std::string::npos) comma = item.size();
      if (comma > start) out.push_back(item.substr(start, comma - start));
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite enriched closure spaces: way-below, continuity and theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-n", g.max_n, "Element cap (at most 20)")->envname("CLOSETLAB_MAX_N");
  app.add_option("--seed", g.seed, "Random seed for search");
  app.add_option("--galois-cap", g.galois_cap, "Skip the Galois-connection condition above this many elements");
  app.add_flag("--timing", g.timing, "Include wall-clock timing in reports");

  std::string input;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run every checker on a structure file or fixture");
  analyze_cmd->add_option("input", input, "Structure file or fixture name")->required();

  std::string checker;
  auto* check_cmd = app.add_subcommand("check", "Run one checker");
  check_cmd->add_option("checker", checker, "Checker name")->required()->check(CLI::IsMember(checker_names()));
  check_cmd->add_option("input", input, "Structure file or fixture name")->required();

  auto* wb_cmd = app.add_subcommand("waybelow", "Print the way-below relation");
  wb_cmd->add_option("input", input, "Structure file or fixture name")->required();

  SearchConfig config;
  unsigned size = 0;
  std::vector<std::string> kinds;
  std::vector<std::string> targets;
  bool no_minimize = false;
  auto* search_cmd = app.add_subcommand("search", "Random or exhaustive search for theorem violations");
  search_cmd->add_option("--size", size, "Exact structure size (sets both bounds)");
  search_cmd->add_option("--min-size", config.min_size, "Smallest structure size");
  search_cmd->add_option("--max-size", config.max_size, "Largest structure size");
  search_cmd->add_option("--samples", config.samples, "Number of random structures");
  search_cmd->add_flag("--exhaustive", config.exhaustive, "Enumerate every quasiorder of each size");
  search_cmd->add_option("--kinds", kinds, "Operator kinds, comma separated");
  search_cmd->add_option("--target", targets, "Checker to run, repeatable or comma separated");
  search_cmd->add_option("--threads", config.threads, "Worker threads (0: all cores)");
  search_cmd->add_flag("--no-minimize", no_minimize, "Report findings without shrinking them");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "List builtin fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (g.max_n) set_max_elements(g.max_n);
    if (*analyze_cmd) return run_analysis(g, input, "");
    if (*check_cmd) return run_analysis(g, input, checker);
    if (*wb_cmd) {
      auto space = load(input);
      emit(g, way_below_json(space), way_below_text(space));
      return kOk;
    }
    if (*fixtures_cmd) return list_fixtures(g);
    if (*search_cmd) {
      if (size) config.min_size = config.max_size = size;
      config.kinds = split_list(kinds);
      config.targets = split_list(targets);
      config.seed = g.seed;
      config.minimize = !no_minimize;
      config.options.galois_cap = g.galois_cap;
      auto result = search(config);
      emit(g, search_json(result, g.timing), search_text(result, g.timing));
      return result.inconsistencies() ? kInconsistent : kOk;
    }
  } catch (const InvalidStructure& e) {
    std::cerr << "invalid structure: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
