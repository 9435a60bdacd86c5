#pragma once

#include <optional>
#include <vector>

#include "kdvspec/matrix.hpp"

namespace kdvspec {

/// Result of exact Gaussian elimination on A x = b over Q(constants).
struct LinearSolution {
  std::size_t rank = 0;
  bool consistent = false;
  /// One particular solution (free variables set to 0) when consistent.
  std::vector<RatFun> particular;
  /// Basis of the null space of A.
  std::vector<std::vector<RatFun>> nullspace;
};

LinearSolution solve_linear(SymMatrix a, std::vector<RatFun> b);

}  // namespace kdvspec
