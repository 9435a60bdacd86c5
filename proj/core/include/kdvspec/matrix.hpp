#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kdvspec/error.hpp"
#include "kdvspec/ratfun.hpp"

namespace kdvspec {

/// Dense row-major matrix. Entries in one matrix share the global variable
/// universe, so no lifting is ever needed.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Copy without one column.
  Matrix without_column(std::size_t col) const {
    if (col >= cols_) raise(ErrorCode::IndexOutOfRange, "column " + std::to_string(col));
    Matrix out(rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0, k = 0; j < cols_; ++j)
        if (j != col) out(i, k++) = (*this)(i, j);
    return out;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<MPoly>;
using SymMatrix = Matrix<RatFun>;

/// Bareiss elimination over Q[vars]; every division is exact.
MPoly det_bareiss(PolyMatrix m);

/// Clears row denominators, runs det_bareiss and divides the cleared factor
/// back out.
RatFun det_fraction_free(const SymMatrix& m);

/// Laplace expansion along rows with memoized minors (keyed by the set of
/// remaining columns). Exponential, meant as a cross-check for n <= 8 or so.
RatFun det_cofactor(const SymMatrix& m);

enum class DetMode { Bareiss, Cofactor };
RatFun determinant(const SymMatrix& m, DetMode mode = DetMode::Bareiss);

}  // namespace kdvspec
