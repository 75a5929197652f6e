#include "closetlab/set_operator.hpp"

#include <atomic>
#include <mutex>

#include "closetlab/errors.hpp"

namespace closetlab {

namespace {
// Masks never reach bit 31 because universes are capped at 20 elements.
constexpr Subset::Bits kUnset = ~Subset::Bits{0};
}  // namespace

struct SetOperator::Impl {
  Universe universe;
  std::string kind;
  Rule rule;
  std::unique_ptr<std::atomic<Subset::Bits>[]> memo;
  mutable std::once_flag classified;
  mutable OperatorClass cls;

  Impl(Universe u, std::string k, Rule r)
      : universe(std::move(u)),
        kind(std::move(k)),
        rule(std::move(r)),
        memo(new std::atomic<Subset::Bits>[universe.subset_count()]) {
    for (std::size_t i = 0; i < universe.subset_count(); ++i) {
      memo[i].store(kUnset, std::memory_order_relaxed);
    }
  }

  Subset eval(Subset a) const {
    auto& slot = memo[a.bits()];
    auto v = slot.load(std::memory_order_acquire);
    if (v != kUnset) return Subset(v);
    Subset r = rule(a);
    if (!universe.contains(r)) {
      throw InvalidStructure("operator '" + kind + "' maps " + universe.format(a) +
                             " outside the universe");
    }
    slot.store(r.bits(), std::memory_order_release);
    return r;
  }

  void classify() const {
    const std::size_t count = universe.subset_count();
    const unsigned n = universe.size();
    for (std::size_t m = 0; m < count; ++m) {
      Subset a(static_cast<Subset::Bits>(m));
      Subset image = eval(a);
      if (cls.extensive && !a.subset_of(image)) {
        cls.extensive = false;
        cls.not_extensive_at = a;
      }
      // A subset of B implies op(A) subset of op(B) iff it holds along every
      // single-element extension, by transitivity of inclusion.
      if (cls.monotone) {
        for (unsigned i = 0; i < n; ++i) {
          if (a.contains(i)) continue;
          if (!image.subset_of(eval(a.with(i)))) {
            cls.monotone = false;
            cls.not_monotone_at = std::make_pair(a, a.with(i));
            break;
          }
        }
      }
      if (cls.idempotent && eval(image) != image) {
        cls.idempotent = false;
        cls.not_idempotent_at = a;
      }
    }
  }
};

SetOperator::SetOperator(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

SetOperator SetOperator::from_rule(Universe universe, std::string kind, Rule rule) {
  return SetOperator(std::make_shared<const Impl>(std::move(universe), std::move(kind),
                                                  std::move(rule)));
}

SetOperator SetOperator::from_table(Universe universe, std::vector<Subset> table,
                                    std::string kind) {
  if (table.size() != universe.subset_count()) {
    throw InvalidStructure("operator table has " + std::to_string(table.size()) +
                           " entries, expected " + std::to_string(universe.subset_count()));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!universe.contains(table[i])) {
      throw InvalidStructure("operator table entry " + std::to_string(i) +
                             " lies outside the universe");
    }
  }
  auto shared = std::make_shared<const std::vector<Subset>>(std::move(table));
  SetOperator op = from_rule(std::move(universe), std::move(kind),
                             [shared](Subset a) { return (*shared)[a.bits()]; });
  for (std::size_t i = 0; i < shared->size(); ++i) op(Subset(static_cast<Subset::Bits>(i)));
  return op;
}

SetOperator SetOperator::identity(Universe universe) {
  return from_rule(std::move(universe), "identity", [](Subset a) { return a; });
}

Subset SetOperator::operator()(Subset a) const { return impl_->eval(a); }

const Universe& SetOperator::universe() const { return impl_->universe; }

const std::string& SetOperator::kind() const { return impl_->kind; }

const OperatorClass& SetOperator::classification() const {
  std::call_once(impl_->classified, [this] { impl_->classify(); });
  return impl_->cls;
}

std::vector<Subset> SetOperator::table() const {
  std::vector<Subset> out;
  out.reserve(universe().subset_count());
  for (std::size_t m = 0; m < universe().subset_count(); ++m) {
    out.push_back((*this)(Subset(static_cast<Subset::Bits>(m))));
  }
  return out;
}

std::optional<Subset> first_difference(const SetOperator& a, const SetOperator& b) {
  if (!(a.universe() == b.universe())) {
    throw InvalidStructure("operators are defined over different universes");
  }
  for (std::size_t m = 0; m < a.universe().subset_count(); ++m) {
    Subset s(static_cast<Subset::Bits>(m));
    if (a(s) != b(s)) return s;
  }
  return std::nullopt;
}

bool operator==(const SetOperator& a, const SetOperator& b) {
  return a.universe() == b.universe() && !first_difference(a, b);
}

}  // namespace closetlab
