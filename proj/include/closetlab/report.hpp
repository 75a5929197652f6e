#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace closetlab {

// `info` is for plain computations; theorem drivers only ever produce the
// other three. `inconsistent` means a proved implication failed on a
// concrete structure.
enum class Verdict { info, holds, hypothesis_not_met, inconsistent };

std::string_view to_string(Verdict v);

struct Fact {
  std::string name;
  std::optional<bool> value;  // nullopt: skipped
};

struct Report {
  std::string check;
  Verdict verdict = Verdict::holds;
  std::vector<Fact> facts;
  // Rendered counterexample, when the check has one to show.
  std::string witness;
  std::string note;

  Report() = default;
  explicit Report(std::string name, Verdict v = Verdict::holds)
      : check(std::move(name)), verdict(v) {}

  Report& set(std::string name, std::optional<bool> value);
  std::optional<bool> get(std::string_view name) const;

  // Marks the report inconsistent and records why.
  void fail(const std::string& why);
  // Marks a hypothesis as unmet unless already inconsistent.
  void unmet(const std::string& why);
  void add_note(const std::string& text);

  bool inconsistent() const { return verdict == Verdict::inconsistent; }
};

}  // namespace closetlab
