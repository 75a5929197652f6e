#include "closetlab/subset.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include "closetlab/errors.hpp"

namespace closetlab {

namespace {
std::atomic<unsigned> g_max_elements{kDefaultMaxElements};
}

unsigned max_elements() { return g_max_elements.load(std::memory_order_relaxed); }

void set_max_elements(unsigned n) {
  if (n == 0 || n > kHardMaxElements) {
    throw CapError("element cap must be in [1, " + std::to_string(kHardMaxElements) +
                   "], got " + std::to_string(n));
  }
  g_max_elements.store(n, std::memory_order_relaxed);
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidStructure("universe must have at least one element");
  if (names_.size() > max_elements()) {
    throw CapError("universe has " + std::to_string(names_.size()) +
                   " elements, cap is " + std::to_string(max_elements()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw InvalidStructure("duplicate element name '" + n + "'");
  }
}

Universe Universe::indexed(unsigned n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (unsigned i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Universe(std::move(names));
}

std::optional<unsigned> Universe::find(std::string_view name) const {
  for (unsigned i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

unsigned Universe::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InvalidStructure("unknown element '" + std::string(name) + "'");
}

Subset Universe::subset(std::span<const std::string> names) const {
  Subset s;
  for (const auto& n : names) s = s.with(index_of(n));
  return s;
}

Subset Universe::subset(std::initializer_list<std::string_view> names) const {
  Subset s;
  for (auto n : names) s = s.with(index_of(n));
  return s;
}

std::string Universe::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (unsigned i : s) {
    if (!first) out += ',';
    out += i < size() ? names_[i] : "#" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

SubsetFamily::SubsetFamily(Universe universe) : universe_(std::move(universe)) {}

SubsetFamily::SubsetFamily(Universe universe, std::vector<Subset> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  for (auto s : members_) {
    if (!universe_.contains(s)) throw InvalidStructure("family member outside universe");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SubsetFamily::insert(Subset s) {
  if (!universe_.contains(s)) throw InvalidStructure("family member outside universe");
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it != members_.end() && *it == s) return false;
  members_.insert(it, s);
  return true;
}

bool SubsetFamily::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::string SubsetFamily::format() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += universe_.format(members_[i]);
  }
  return out + "}";
}

SubsetFamily singletons(const Universe& u, bool with_empty) {
  std::vector<Subset> members;
  if (with_empty) members.emplace_back();
  for (unsigned i = 0; i < u.size(); ++i) members.push_back(Subset::singleton(i));
  return SubsetFamily(u, std::move(members));
}

SubsetFamily all_subsets(const Universe& u) {
  std::vector<Subset> members;
  members.reserve(u.subset_count());
  for (std::size_t m = 0; m < u.subset_count(); ++m) members.emplace_back(static_cast<Subset::Bits>(m));
  return SubsetFamily(u, std::move(members));
}

}  // namespace closetlab
