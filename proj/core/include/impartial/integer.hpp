#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace impartial {

/// Arbitrary-precision signed integer used for pile sizes, coordinates and
/// game values that may exceed 64 bits.
using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Integer& value);

/// Parses a base-10 non-negative integer. Throws ParseError on anything else.
Integer parse_nonnegative(std::string_view text);

/// True if value fits in an unsigned 64-bit integer.
bool fits_u64(const Integer& value);

/// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& value);

}  // namespace impartial
