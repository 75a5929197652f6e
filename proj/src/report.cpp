#include "closetlab/report.hpp"

namespace closetlab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::info: return "info";
    case Verdict::holds: return "holds";
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    case Verdict::inconsistent: return "INCONSISTENT";
  }
  return "?";
}

Report& Report::set(std::string name, std::optional<bool> value) {
  for (auto& f : facts) {
    if (f.name == name) {
      f.value = value;
      return *this;
    }
  }
  facts.push_back({std::move(name), value});
  return *this;
}

std::optional<bool> Report::get(std::string_view name) const {
  for (const auto& f : facts) {
    if (f.name == name) return f.value;
  }
  return std::nullopt;
}

void Report::add_note(const std::string& text) {
  if (text.empty()) return;
  if (!note.empty()) note += "; ";
  note += text;
}

void Report::fail(const std::string& why) {
  verdict = Verdict::inconsistent;
  add_note(why);
}

void Report::unmet(const std::string& why) {
  if (verdict != Verdict::inconsistent) verdict = Verdict::hypothesis_not_met;
  add_note(why);
}

}  // namespace closetlab
