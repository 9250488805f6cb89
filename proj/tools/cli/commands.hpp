#pragma once

#include <cstddef>
#include <iosfwd>

namespace impartial::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsageError = 2,
  kCapacityError = 3,
};

inline constexpr std::size_t kDefaultMaxNodes = 10'000'000;

/// Value of REMOTENESS_MAX_NODES, or kDefaultMaxNodes when unset.
/// ArgumentError on a malformed value.
std::size_t node_budget();

/// Entry point shared by the binary and the tests. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace impartial::cli
