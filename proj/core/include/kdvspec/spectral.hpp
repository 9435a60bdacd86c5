#pragma once

#include <vector>

#include "kdvspec/diffop.hpp"
#include "kdvspec/families.hpp"
#include "kdvspec/hierarchy.hpp"

namespace kdvspec {

struct LevelResult {
  unsigned s = 0;
  /// (c_1, ..., c_s), rational functions of the constant symbols.
  std::vector<RatFun> cbar;
  /// k_l = kdv_l(u) for l = 0..s.
  std::vector<Elem> k;
};

/// First n <= s_max for which k_n + k_{n-1} c_1 + ... + k_0 c_n = 0 has a
/// constant solution. Raises LevelNotFound, or Underdetermined if the
/// solution at the level is not unique.
LevelResult kdv_level(const Potential& pot, unsigned s_max = 8, Hierarchy& h = Hierarchy::shared());

/// kdv_l(u) for l = 0..n.
std::vector<Elem> kdv_values(const Potential& pot, unsigned n, Hierarchy& h = Hierarchy::shared());

struct FlagSpaces {
  unsigned n = 0;
  /// Basis of V_n = {xi : sum_i k_{n-i} xi_i = 0}.
  std::vector<std::vector<RatFun>> basis;
  /// (c_1, ..., c_s, 0, ..., 0, d) in H_n; d is nonzero when the integration
  /// constant of f_{s+1}(u) is (elliptic family).
  std::vector<RatFun> representative;
  /// Every returned vector satisfies its defining equation.
  bool verified = false;
};

/// Raises IndexBelowLevel for n <= s.
FlagSpaces flag_spaces(const Potential& pot, const LevelResult& level, unsigned n, Hierarchy& h = Hierarchy::shared());

/// KdV_n(u, xi) evaluated in the field.
Elem kdv_ext_value(const Potential& pot, const std::vector<RatFun>& xi, Hierarchy& h = Hierarchy::shared());

/// A_{2n+1} = P^_{2n+1}(u, constants) with n = constants.size().
FieldOp build_A(const Potential& pot, const std::vector<RatFun>& constants, Hierarchy& h = Hierarchy::shared());
inline FieldOp build_A(const Potential& pot, const LevelResult& level) { return build_A(pot, level.cbar); }

bool centralizer_check(const Potential& pot, const std::vector<RatFun>& constants);
inline bool centralizer_check(const Potential& pot, const LevelResult& level) {
  return centralizer_check(pot, level.cbar);
}

/// f_s = -mu^2 - R(lambda) together with the field K(Gamma) where mu^2 = -R.
struct CurvePoly {
  unsigned s = 0;
  MPoly f;
  MPoly R;
  FieldContext::Ptr base;
  FieldContext::Ptr field;
};

Elem lambda_in(const FieldContext::Ptr& ctx);
Elem mu_in(const FieldContext::Ptr& ctx);
FieldOp schrodinger_minus(const Elem& u, const Elem& c);

/// Raises NonConstantCoefficient or ShapeMismatch.
CurvePoly spectral_curve(const Potential& pot, const LevelResult& level, DetMode mode = DetMode::Bareiss);

/// Normal form on the curve (mu^2 -> -R).
Elem curve_reduce(const RatFun& p, const CurvePoly& curve);
/// Raises ZeroOnCurve.
Elem curve_invert(const Elem& e, const CurvePoly& curve);

/// (a + b mu) / Lambda view of a curve element.
struct CurveParts {
  MPoly a, b, Lambda;
};
CurveParts curve_parts(const Elem& e);

struct Factorization {
  Elem phi_plus, phi_minus;  // in K(Gamma)
  Elem alpha, phi2;          // in K[lambda]
  Elem s10, s11;             // det S_1^0, det S_1^1
};

/// Raises ZeroSubresultant.
Factorization factor_on_curve(const Potential& pot, const LevelResult& level, const CurvePoly& curve);

/// phi' + phi^2 - u + lambda == 0 on the curve.
bool riccati_check(const Elem& phi, const Potential& pot, const CurvePoly& curve);

struct IdentityReport {
  bool difference = false;   // phi+ - phi- = 2 mu / phi2
  bool fundamental = false;  // phi2''' - 4(u - lambda) phi2' - 2 u' phi2 = 0
  bool all() const { return difference && fundamental; }
};
IdentityReport solution_identities(const Factorization& fac, const CurvePoly& curve, const Potential& pot);

struct SpecializedFactor {
  RatFun lambda0, mu0;
  Elem phi0;
  bool in_Z = false;                  // mu0 == 0
  bool factorization_verified = false; // L - lambda0 == (-D - phi0)(D - phi0)
  bool gcd_order_one = false;          // right gcd of L - lambda0, A - mu0 is D - phi0
};

/// Raises NotOnCurve or VanishingPhi2.
SpecializedFactor specialize_at_point(const Potential& pot, const LevelResult& level, const CurvePoly& curve,
                                      const Factorization& fac, const RatFun& lambda0, const RatFun& mu0);
SpecializedFactor specialize_at_point(const Potential& pot, const LevelResult& level, const CurvePoly& curve,
                                      const RatFun& lambda0, const RatFun& mu0);

}  // namespace kdvspec
