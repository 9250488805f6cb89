#include "impartial/integer.hpp"

#include <limits>

#include "impartial/errors.hpp"

namespace impartial {

std::string to_string(const Integer& value) { return value.str(); }

Integer parse_nonnegative(std::string_view text) {
  if (text.empty()) throw ParseError("expected a non-negative integer, got an empty string");
  Integer value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

bool fits_u64(const Integer& value) {
  return value >= 0 && value <= std::numeric_limits<std::uint64_t>::max();
}

Integer isqrt(const Integer& value) {
  if (value < 0) throw ArgumentError("isqrt of a negative number");
  return boost::multiprecision::sqrt(value);
}

}  // namespace impartial
