#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace closetlab {

inline constexpr unsigned kDefaultMaxElements = 16;
inline constexpr unsigned kHardMaxElements = 20;

// Process-wide cap on universe size. Universes larger than this are
// rejected at construction with CapError.
unsigned max_elements();
void set_max_elements(unsigned n);

// A subset of a finite universe, stored as a bitmask (bit i = element i).
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static constexpr Subset singleton(unsigned i) { return Subset(Bits{1} << i); }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(unsigned i) const { return ((bits_ >> i) & 1u) != 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  constexpr Subset with(unsigned i) const { return Subset(bits_ | (Bits{1} << i)); }
  constexpr Subset without(unsigned i) const { return Subset(bits_ & ~(Bits{1} << i)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;
  // Numeric bitmask order; used for deterministic witness selection.
  friend constexpr auto operator<=>(Subset, Subset) = default;

  class iterator {
   public:
    using value_type = unsigned;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr unsigned operator*() const { return static_cast<unsigned>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto old = *this; ++*this; return old; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    Bits rest_ = 0;
  };

  // Iterates element indices in increasing order.
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  Bits bits_ = 0;
};

// A finite, named carrier set. Element i is the i-th name.
class Universe {
 public:
  explicit Universe(std::vector<std::string> names);

  // Elements named "0", "1", ..., "n-1".
  static Universe indexed(unsigned n);

  unsigned size() const { return static_cast<unsigned>(names_.size()); }
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  Subset full() const { return Subset(static_cast<Subset::Bits>(subset_count() - 1)); }
  Subset complement(Subset s) const { return full() - s; }
  bool contains(Subset s) const { return s.subset_of(full()); }

  const std::string& name(unsigned i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<unsigned> find(std::string_view name) const;
  unsigned index_of(std::string_view name) const;

  Subset subset(std::span<const std::string> names) const;
  Subset subset(std::initializer_list<std::string_view> names) const;

  std::string format(Subset s) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> names_;
};

// A deduplicated family of subsets of one universe, kept in bitmask order.
class SubsetFamily {
 public:
  explicit SubsetFamily(Universe universe);
  SubsetFamily(Universe universe, std::vector<Subset> members);

  bool insert(Subset s);
  bool contains(Subset s) const;

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Subset>& members() const { return members_; }
  const Universe& universe() const { return universe_; }

  std::string format() const;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  Universe universe_;
  std::vector<Subset> members_;
};

// Family of all singletons, optionally with the empty set.
SubsetFamily singletons(const Universe& u, bool with_empty = false);
SubsetFamily all_subsets(const Universe& u);

}  // namespace closetlab
