#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kdvspec/ratfun.hpp"

namespace kdvspec {

/// Dense univariate polynomial in t with coefficients in Q(other symbols).
/// c[i] is the coefficient of t^i; no trailing zeros.
class UPoly {
public:
  UPoly() = default;
  UPoly(Var t, std::vector<RatFun> c);
  UPoly(Var t, const RatFun& c) : UPoly(t, std::vector<RatFun>{c}) {}
  /// Splits a polynomial in t; other variables go into the coefficients.
  static UPoly from_mpoly(Var t, const MPoly& p);
  static UPoly monomial(Var t, unsigned k, const RatFun& c = RatFun(1));

  Var var() const { return t_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RatFun>& coeffs() const { return c_; }
  RatFun coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : RatFun(); }
  const RatFun& lead() const { return c_.back(); }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const { return *this + (-o); }
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const RatFun& c) const;
  UPoly derivative() const;
  UPoly monic() const;
  RatFun eval(const RatFun& v) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  /// Coefficients over a common denominator, as one polynomial in t.
  RatFun to_ratfun() const;
  std::string str() const { return to_ratfun().str(); }

private:
  void trim();
  Var t_ = 0;
  std::vector<RatFun> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly up_exact_div(const UPoly& a, const UPoly& b);
/// Monic gcd.
UPoly up_gcd(UPoly a, UPoly b);
/// (s, r) with s*a + r*b = c and deg s < deg b; a, b coprime.
std::pair<UPoly, UPoly> up_diophantine(const UPoly& a, const UPoly& b, const UPoly& c);

/// Rational roots of a univariate polynomial over Q, ascending, each once.
std::vector<Rat> rational_roots(const MPoly& p, Var v);

}  // namespace kdvspec
