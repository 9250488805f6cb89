#include "impartial/compound.hpp"

#include <algorithm>

namespace impartial {

SgValue disjunctive_sg(std::span<const SgValue> values) {
  Integer sum = 0;
  for (const auto& g : values) sum ^= g.value;
  return SgValue(std::move(sum));
}

Remoteness conjunctive_remoteness(std::span<const Remoteness> values) {
  if (values.empty()) throw ArgumentError("conjunctive compound of zero games");
  return *std::min_element(values.begin(), values.end());
}

}  // namespace impartial
