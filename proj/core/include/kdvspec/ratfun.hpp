#pragma once

#include <map>
#include <string>

#include "kdvspec/mpoly.hpp"

namespace kdvspec {

/// Rational function num/den over Q in canonical form: gcd(num, den) = 1 and
/// den has coprime integer coefficients with a positive leading coefficient.
/// Zero is 0/1, so equality is structural.
class RatFun {
public:
  RatFun() : den_(1) {}
  RatFun(const MPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rat& c) : num_(c), den_(1) {}    // NOLINT(google-explicit-constructor)
  RatFun(long c) : num_(c), den_(1) {}          // NOLINT(google-explicit-constructor)
  RatFun(const MPoly& num, const MPoly& den);

  static RatFun var(Var v) { return RatFun(MPoly::var(v)); }
  /// Trusts the caller that (num, den) is already canonical.
  static RatFun from_canonical(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  Rat constant_value() const { return num_.constant_term(); }
  bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }
  std::vector<Var> variables() const;

  RatFun operator-() const { return from_canonical(-num_, den_); }
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const { return *this + (-o); }
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  RatFun inverse() const;
  RatFun pow(int e) const;
  RatFun scaled(const Rat& c) const;

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  /// Partial derivative in v.
  RatFun derivative(Var v) const;
  RatFun substitute(Var v, const RatFun& value) const;

  std::string str() const;

private:
  MPoly num_, den_;
};

/// The same as RatFun(num, den); spelled out for call sites that want the
/// normalization step to be visible.
RatFun ratfun_normalize(const MPoly& num, const MPoly& den);

/// Simultaneous substitution of variables by rational functions, evaluated
/// over one common denominator (one gcd at the end instead of one per term).
RatFun substitute_all(const MPoly& p, const std::map<Var, RatFun>& values);
RatFun substitute_all(const RatFun& r, const std::map<Var, RatFun>& values);

}  // namespace kdvspec
