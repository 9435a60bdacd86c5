#pragma once

#include <map>
#include <string>

#include "kdvspec/field.hpp"
#include "kdvspec/matrix.hpp"
#include "kdvspec/mpoly.hpp"

namespace kdvspec {

/// Element of C{u}[lambda, mu, c1, ...]: a polynomial in the jet variables
/// u, du, d2u, ... with the total derivation d(u_k) = u_{k+1}. Every other
/// symbol is a constant.
class DiffPoly {
public:
  DiffPoly() = default;
  DiffPoly(MPoly p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  DiffPoly(long c) : p_(c) {}              // NOLINT(google-explicit-constructor)
  static DiffPoly u(unsigned k = 0) { return DiffPoly(MPoly::var(sym::u_derivative(k))); }

  const MPoly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  bool is_one() const { return p_.is_one(); }
  /// Highest jet order present, -1 when free of u.
  int order() const;

  DiffPoly zero_like() const { return DiffPoly(); }
  DiffPoly one_like() const { return DiffPoly(1); }

  DiffPoly operator-() const { return DiffPoly(-p_); }
  DiffPoly operator+(const DiffPoly& o) const { return DiffPoly(p_ + o.p_); }
  DiffPoly operator-(const DiffPoly& o) const { return DiffPoly(p_ - o.p_); }
  DiffPoly operator*(const DiffPoly& o) const { return DiffPoly(p_ * o.p_); }
  DiffPoly& operator+=(const DiffPoly& o) { return *this = *this + o; }
  DiffPoly& operator-=(const DiffPoly& o) { return *this = *this - o; }
  DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }
  DiffPoly scaled(const Rat& c) const { return DiffPoly(p_.scaled(c)); }
  bool operator==(const DiffPoly& o) const { return p_ == o.p_; }
  bool operator!=(const DiffPoly& o) const { return !(p_ == o.p_); }

  DiffPoly derivative() const;
  std::string str() const { return p_.str(); }

private:
  MPoly p_;
};

inline DiffPoly dp_derive(const DiffPoly& p) { return p.derivative(); }

/// Antiderivative with zero u-free constant. Raises NotTotalDerivative.
DiffPoly dp_integrate(const DiffPoly& p);

/// u-weight of a monomial: u_k weighs k + 2; returns -1 for mixed weights.
int dp_weight(const DiffPoly& p);

/// Image of p under u -> pot (jets by repeated derivation) and c_i -> values.
/// Symbols not in `constants` are kept.
Elem dp_substitute(const DiffPoly& p, const Elem& pot, const std::map<Var, RatFun>& constants = {});

/// Determinant of a matrix of differential polynomials.
DiffPoly coeff_determinant(const Matrix<DiffPoly>& m, DetMode mode = DetMode::Bareiss);
/// Determinant of a matrix over a field context (computed over the free
/// polynomial ring, then reduced).
Elem coeff_determinant(const Matrix<Elem>& m, DetMode mode = DetMode::Bareiss);

}  // namespace kdvspec
