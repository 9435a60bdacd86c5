#include "kdvspec/linsolve.hpp"

namespace kdvspec {

LinearSolution solve_linear(SymMatrix a, std::vector<RatFun> b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) raise(ErrorCode::InvalidArgument, "right-hand side length mismatch");
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      std::swap(b[p], b[r]);
    }
    RatFun inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      RatFun f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  LinearSolution out;
  out.rank = r;
  out.consistent = true;
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) out.consistent = false;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  if (out.consistent) {
    out.particular.assign(cols, RatFun());
    for (std::size_t i = 0; i < r; ++i) out.particular[pivots[i]] = b[i];
  }
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RatFun> v(cols);
    v[f] = RatFun(1);
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = -a(i, f);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace kdvspec
