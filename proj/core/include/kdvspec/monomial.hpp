#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>

#include "kdvspec/symbol.hpp"

namespace kdvspec {

struct VarPow {
  Var var;
  std::uint32_t exp;
  bool operator==(const VarPow&) const = default;
};

/// Sparse power product: (var, exp) pairs sorted by var rank, exp > 0.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t e = 1);
  Monomial(std::initializer_list<VarPow> powers);

  std::uint32_t degree() const { return degree_; }
  std::uint32_t degree(Var v) const;
  bool is_one() const { return powers_.empty(); }
  std::size_t size() const { return powers_.size(); }
  auto begin() const { return powers_.begin(); }
  auto end() const { return powers_.end(); }

  Monomial operator*(const Monomial& other) const;
  /// True when other divides *this.
  bool divisible_by(const Monomial& other) const;
  /// Requires divisible_by(other).
  Monomial operator/(const Monomial& other) const;
  Monomial with_exp(Var v, std::uint32_t e) const;
  Monomial without(Var v) const { return with_exp(v, 0); }
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const {
    return degree_ == other.degree_ && powers_ == other.powers_;
  }
  /// Graded lexicographic order; the earlier-declared variable dominates.
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::size_t hash() const;

private:
  boost::container::small_vector<VarPow, 4> powers_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace kdvspec
