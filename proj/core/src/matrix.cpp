#include "kdvspec/matrix.hpp"

#include <cstdint>
#include <unordered_map>

namespace kdvspec {

MPoly det_bareiss(PolyMatrix m) {
  if (!m.is_square()) raise(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const std::size_t n = m.rows();
  if (n == 0) return MPoly(1);
  bool negate = false;
  MPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Sparsest nonzero pivot keeps intermediate minors small.
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m(i, k).is_zero() && (piv == n || m(i, k).size() < m(piv, k).size())) piv = i;
    if (piv == n) return MPoly();
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      negate = !negate;
    }
    const MPoly& p = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly v = m(i, j) * p;
        if (!m(i, k).is_zero() && !m(k, j).is_zero()) v -= m(i, k) * m(k, j);
        m(i, j) = prev.is_one() ? std::move(v) : exact_quotient(v, prev);
      }
    }
    prev = m(k, k);
  }
  MPoly d = m(n - 1, n - 1);
  return negate ? -d : d;
}

RatFun det_fraction_free(const SymMatrix& m) {
  if (!m.is_square()) raise(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const std::size_t n = m.rows();
  PolyMatrix pm(n, n);
  MPoly cleared(1);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly l(1);
    for (std::size_t j = 0; j < n; ++j) {
      const MPoly& d = m(i, j).den();
      if (!d.is_one()) l = exact_quotient(l * d, gcd(l, d));
    }
    for (std::size_t j = 0; j < n; ++j)
      pm(i, j) = l.is_one() ? m(i, j).num() : m(i, j).num() * exact_quotient(l, m(i, j).den());
    cleared *= l;
  }
  return RatFun(det_bareiss(std::move(pm)), cleared);
}

RatFun det_cofactor(const SymMatrix& m) {
  if (!m.is_square()) raise(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  const std::size_t n = m.rows();
  if (n > 63) raise(ErrorCode::IndexOutOfRange, "cofactor expansion limited to 63 columns");
  std::unordered_map<std::uint64_t, RatFun> memo;
  // minor(cols) = determinant of the last popcount(cols) rows restricted to cols.
  auto minor = [&](auto&& self, std::uint64_t cols, std::size_t row) -> RatFun {
    if (row == n) return RatFun(1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    RatFun acc;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols >> j & 1U)) continue;
      if (!m(row, j).is_zero()) {
        RatFun t = m(row, j) * self(self, cols & ~(std::uint64_t{1} << j), row + 1);
        acc = sign > 0 ? acc + t : acc - t;
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor(minor, n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1), 0);
}

RatFun determinant(const SymMatrix& m, DetMode mode) {
  return mode == DetMode::Bareiss ? det_fraction_free(m) : det_cofactor(m);
}

}  // namespace kdvspec
