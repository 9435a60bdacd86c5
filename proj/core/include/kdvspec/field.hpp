#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kdvspec/ratfun.hpp"

namespace kdvspec {

enum class TowerKind { Rational, Exponential, Weierstrass };

/// y^2 = square, with square free of every relation variable.
struct Relation {
  Var y;
  MPoly square;
};

/// A concrete differential field presented as Q(vars)[y_1..y_k]/(y_i^2 - S_i)
/// with a derivation given on generators. Variables without a derivation
/// rule are constants.
///
/// The canonical form of an element is a RatFun whose denominator is free of
/// every y_i and whose numerator has degree <= 1 in each y_i. Because the y_i
/// monomials are a basis over the y-free subfield, this form is unique.
class FieldContext {
public:
  using Ptr = std::shared_ptr<const FieldContext>;

  FieldContext(std::string name, TowerKind kind, std::vector<Var> generators, std::map<Var, RatFun> derivation,
               std::vector<Relation> relations);

  /// Q(constants)(x), dx = 1.
  static Ptr rational();
  /// Q(constants)(t), dt = rate*t. rate 1 is eta = e^x, rate 2 is w = e^{2x}.
  static Ptr exponential(Var t, const Rat& rate);
  /// Q(constants, g2, g3)(wp, dwp) with dwp^2 = 4wp^3 - g2*wp - g3.
  static Ptr weierstrass();
  /// Same tower with g2, g3 replaced by numbers (used for specialization tests).
  static Ptr weierstrass(const Rat& g2, const Rat& g3);

  /// Adds an algebraic constant y with y^2 = square (e.g. mu on the curve).
  Ptr with_relation(Var y, const MPoly& square, std::string name) const;

  const std::string& name() const { return name_; }
  TowerKind kind() const { return kind_; }
  const std::vector<Var>& generators() const { return generators_; }
  bool is_generator(Var v) const;
  const std::map<Var, RatFun>& derivation() const { return derivation_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const Relation* relation_for(Var y) const;

  MPoly reduce(const MPoly& p) const;
  RatFun canonical(const RatFun& r) const;
  /// Derivation of a canonical value; the result is canonical.
  RatFun derive(const RatFun& r) const;
  /// Image under y -> -y.
  RatFun conjugate(const RatFun& r, Var y) const;

  bool same_as(const FieldContext& o) const;

private:
  MPoly derive_poly_num(const MPoly& p, MPoly& den) const;

  std::string name_;
  TowerKind kind_;
  std::vector<Var> generators_;
  std::map<Var, RatFun> derivation_;
  std::vector<Relation> relations_;
  bool polynomial_derivation_ = true;
};

/// Element of a FieldContext, always stored in canonical form.
class Elem {
public:
  Elem() = default;
  Elem(FieldContext::Ptr ctx, const RatFun& value);
  Elem(FieldContext::Ptr ctx, long c) : Elem(std::move(ctx), RatFun(c)) {}
  static Elem canonical(FieldContext::Ptr ctx, RatFun value);

  const FieldContext::Ptr& context() const { return ctx_; }
  const RatFun& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_.is_one(); }
  /// True when no generator (or generator relation variable) appears.
  bool is_free_of_generators() const;

  Elem zero_like() const { return canonical(ctx_, RatFun()); }
  Elem one_like() const { return canonical(ctx_, RatFun(1)); }
  Elem lift(const RatFun& r) const { return Elem(ctx_, r); }

  Elem operator-() const { return canonical(ctx_, -value_); }
  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator/(const Elem& o) const { return *this * o.inverse(); }
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }
  Elem scaled(const Rat& c) const { return canonical(ctx_, value_.scaled(c)); }
  Elem inverse() const;
  Elem pow(int e) const;
  Elem derivative() const;
  Elem substitute(Var v, const RatFun& r) const;
  /// Re-canonicalizes the same value in another context.
  Elem in(const FieldContext::Ptr& other) const { return Elem(other, value_); }

  bool operator==(const Elem& o) const { return value_ == o.value_; }
  bool operator!=(const Elem& o) const { return !(*this == o); }

  std::string str() const { return value_.str(); }

private:
  const FieldContext::Ptr& common(const Elem& o) const;

  FieldContext::Ptr ctx_;
  RatFun value_;
};

inline Elem fe_derive(const Elem& e) { return e.derivative(); }
inline Elem fe_invert(const Elem& e) { return e.inverse(); }

/// One coordinate: coefficient of a generator monomial, a rational function
/// of the constant symbols only.
struct Coordinate {
  Monomial mono;
  RatFun coef;
};

/// Writes e * hint_den as a polynomial in the generators (and relation
/// variables) with constant coefficients. Raises BasisMismatch when e is not
/// expressible over the hinted denominator.
std::vector<Coordinate> fe_coordinates(const Elem& e, const MPoly& hint_den);

/// Least common denominator (over Q[generators]) of a family of elements.
MPoly common_denominator(const std::vector<Elem>& es);

}  // namespace kdvspec
