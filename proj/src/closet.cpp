#include "closetlab/closet.hpp"

#include <string>

#include "closetlab/errors.hpp"

namespace closetlab {

namespace {

std::string describe_failure(const SetOperator& op, const OperatorClass& cls) {
  const auto& u = op.universe();
  if (!cls.extensive) return "not extensive at " + u.format(*cls.not_extensive_at);
  if (!cls.monotone) {
    return "not monotone at " + u.format(cls.not_monotone_at->first) + " <= " + u.format(cls.not_monotone_at->second);
  }
  return "not idempotent at " + u.format(*cls.not_idempotent_at);
}

}  // namespace

Qoset specialization(const SetOperator& bracket) {
  const auto& cls = bracket.classification();
  if (!cls.closure()) throw InvalidStructure("bracket is not a closure operator: " + describe_failure(bracket, cls));
  const auto& u = bracket.universe();
  Relation leq(u);
  for (unsigned y = 0; y < u.size(); ++y) {
    for (unsigned x : bracket(Subset::singleton(y))) leq.set(x, y);
  }
  return Qoset(u, std::move(leq));
}

EnrichedCloset assemble(SetOperator bracket, SetOperator c) {
  if (!(bracket.universe() == c.universe())) throw InvalidStructure("bracket and c live on different universes");
  Qoset order = specialization(bracket);
  const auto& ccls = c.classification();
  if (!ccls.preclosure()) throw InvalidStructure("c is not a preclosure operator: " + describe_failure(c, ccls));
  const auto& u = bracket.universe();
  bool alexandrov = true;
  for (std::size_t m = 0; m < u.subset_count(); ++m) {
    Subset a(static_cast<Subset::Bits>(m));
    Subset ca = c(a);
    if (bracket(ca) != ca) {
      throw InvalidStructure("incompatible: [c(A)] != c(A) at A=" + u.format(a) + " ([c(A)]=" +
                             u.format(bracket(ca)) + ", c(A)=" + u.format(ca) + ")");
    }
    if (c(bracket(a)) != ca) {
      throw InvalidStructure("incompatible: c([A]) != c(A) at A=" + u.format(a) + " (c([A])=" +
                             u.format(c(bracket(a))) + ", c(A)=" + u.format(ca) + ")");
    }
    if (bracket(a) != order.down(a)) alexandrov = false;
  }
  return EnrichedCloset(std::move(bracket), std::move(c), std::move(order), alexandrov);
}

}  // namespace closetlab
