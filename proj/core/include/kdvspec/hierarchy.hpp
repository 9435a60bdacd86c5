#pragma once

#include <deque>
#include <mutex>

#include "kdvspec/diffop.hpp"

namespace kdvspec {

/// kdv_n, v_n and P_{2n+1}, built on demand by the recursion
/// kdv_n = -1/4 kdv_{n-1}'' + u kdv_{n-1} + 1/2 u' D^{-1}(kdv_{n-1}).
/// Append-only; concurrent readers are safe, growth is serialized.
class Hierarchy {
public:
  explicit Hierarchy(unsigned max_n = 6);

  DiffPoly kdv(unsigned n);
  DiffPoly v(unsigned n);
  FormalOp p_odd(unsigned n);
  /// KdV_n = kdv_n + sum_{l<n} c_{n-l} kdv_l.
  DiffPoly kdv_ext(unsigned n);
  /// P^_{2n+1} = P_{2n+1} + sum_{l<n} c_{n-l} P_{2l+1}.
  FormalOp p_hat(unsigned n);

  /// [P_{2n+1}, L] == kdv_n.
  bool lax_check(unsigned n);
  /// [P^_{2n+1}, L] == KdV_n.
  bool lax_check_ext(unsigned n);

  unsigned cached() const;

  /// Process-wide instance shared by the pipeline.
  static Hierarchy& shared();

private:
  void grow(unsigned n);

  mutable std::mutex mutex_;
  std::deque<DiffPoly> kdv_, v_;
  std::deque<FormalOp> p_;
};

}  // namespace kdvspec
