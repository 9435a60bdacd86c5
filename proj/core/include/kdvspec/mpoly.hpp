#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdvspec/monomial.hpp"
#include "kdvspec/rational.hpp"

namespace kdvspec {

/// Sparse multivariate polynomial over Q. Terms are kept sorted in strictly
/// decreasing graded-lex order with no zero coefficients; the zero polynomial
/// has no terms. The variable universe is the global symbol table, so two
/// polynomials always live in a common ring.
class MPoly {
public:
  struct Term {
    Monomial mono;
    Rat coef;
  };

  MPoly() = default;
  MPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c);        // NOLINT(google-explicit-constructor)
  static MPoly var(Var v, std::uint32_t exp = 1);
  static MPoly monomial(const Monomial& m, const Rat& c = Rat(1));
  /// Sorts and merges arbitrary terms.
  static MPoly from_terms(std::vector<Term> terms);
  /// Trusts the caller: terms already sorted, unique, nonzero.
  static MPoly from_sorted_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coef == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  const Term& lead() const { return terms_.front(); }
  const Rat& lead_coef() const { return terms_.front().coef; }
  Rat constant_term() const;
  /// Coefficient of an exact monomial.
  Rat coef_of(const Monomial& m) const;

  std::vector<Var> variables() const;
  bool contains(Var v) const;
  bool is_free_of(Var v) const { return !contains(v); }
  std::uint32_t degree() const;
  std::uint32_t degree(Var v) const;
  std::uint32_t min_degree(Var v) const;
  /// Gcd of all term monomials.
  Monomial monomial_content() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Rat& c) const;
  MPoly shifted(const Monomial& m) const;  // multiply by a monomial
  MPoly mul_term(const Monomial& m, const Rat& c) const;
  MPoly pow(unsigned e) const;

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly derivative(Var v) const;
  /// Dense coefficient list in v: result[i] is the coefficient of v^i.
  std::vector<MPoly> coefficients(Var v) const;
  static MPoly from_coefficients(Var v, const std::vector<MPoly>& coeffs);
  MPoly coefficient(Var v, std::uint32_t e) const;
  MPoly substitute(Var v, const MPoly& value) const;
  MPoly evaluate(Var v, const Rat& value) const;

  /// Positive rational c with this/c having coprime integer coefficients.
  Rat content() const;
  /// this / content, sign fixed so the leading coefficient is positive.
  MPoly primitive() const;
  /// Lcm of coefficient denominators.
  Int denominator_lcm() const;

  std::string str() const;
  std::size_t hash() const;

private:
  std::vector<Term> terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p.scaled(c); }

/// Quotient when b divides a exactly in Q[vars].
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);
/// As divide_exact but raises InexactDivision.
MPoly exact_quotient(const MPoly& a, const MPoly& b);

/// Pseudo-remainder of a by b viewed as univariate in v.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, Var v);

/// Primitive gcd over Q: positive leading coefficient, coprime integer
/// coefficients. gcd(0, 0) = 0.
///
/// Hot path of the whole engine (every rational-function normalization lands
/// here). Variables present in only one operand are eliminated through
/// contents first, then a modular image test short-circuits the coprime case,
/// and only the rest runs the subresultant remainder sequence. A modular
/// gcd can replace gcd_prs without touching callers.
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly gcd_prs(const MPoly& a, const MPoly& b, Var main);

/// Content of p with respect to v: gcd of its coefficients in v.
MPoly content_in(const MPoly& p, Var v);

/// p / gcd(p, dp/dv), content-normalized.
MPoly squarefree_part(const MPoly& p, Var v);

/// Yun squarefree decomposition in v: factors[i] has multiplicity i+1.
std::vector<MPoly> squarefree_decomposition(const MPoly& p, Var v);

struct MPolyHash {
  std::size_t operator()(const MPoly& p) const { return p.hash(); }
};

}  // namespace kdvspec
