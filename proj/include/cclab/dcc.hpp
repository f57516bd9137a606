#pragma once

#include "cclab/function_spec.hpp"
#include "cclab/protocol.hpp"

namespace cclab {

inline constexpr std::size_t kDccMaxN = 3;

struct DccResult {
  std::size_t bits = 0;
  Protocol protocol;
};

// Worst-case deterministic complexity by memoized search over row and column
// subsets. Alice's answer is free: a leaf is allowed once every row of the
// current rectangle is constant on its columns.
DccResult dcc_exact(const FunctionTable& t);

}  // namespace cclab
