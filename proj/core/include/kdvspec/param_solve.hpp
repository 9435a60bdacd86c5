#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kdvspec/spectral.hpp"

namespace kdvspec {

/// With -R = S = A * B^2, A squarefree: genus = floor((deg A - 1) / 2).
unsigned hyperelliptic_genus(const CurvePoly& curve);

enum class ParamKind { Rational, WeierstrassPair };

std::string_view param_kind_name(ParamKind k);

/// lambda = chi1, mu = chi2. Rational: chi_i in tau. WeierstrassPair:
/// (-wpt, 1/2 dwpt) with dwpt^2 = 4 wpt^3 - g2 wpt - g3, wpt = wp(tau).
struct Parametrization {
  ParamKind kind = ParamKind::Rational;
  RatFun chi1, chi2;
  int sign = -1;
  /// The coefficient field extended by the parameter constants.
  FieldContext::Ptr field;
  /// f(chi1, chi2) == 0, checked before returning.
  bool verified = false;
};

/// Genus 0 curves of shape mu^2 = k^2 (r - lambda) q(lambda)^2 get
/// chi1 = r - tau^2, chi2 = sign * k * tau * qhat(tau^2) where qhat(r - lambda)
/// = q(lambda) is monic. Genus 1 curves in Weierstrass normal form over the
/// Weierstrass tower get (-wp(tau), sign * -1/2 wp'(tau)). Raises
/// UnsupportedShape otherwise.
Parametrization parametrize_curve(const CurvePoly& curve, int sign = -1);

/// f(chi1(tau), chi2(tau)) reduces to zero.
bool parametrization_identity(const CurvePoly& curve, const Parametrization& par);

/// rho: lambda -> chi1, mu -> chi2. Over Q(eta), eta = e^x, an image that
/// only involves eta^2 is rewritten in w = e^{2x}.
Elem substitute_param(const Elem& e, const Parametrization& par);
/// Image of a coefficient-field element in the field of `like`.
Elem param_lift(const Elem& e, const Parametrization& par, const Elem& like);

/// phi' + phi^2 - u + chi1 == 0 in F.
bool riccati_check_param(const Elem& phit, const Potential& pot, const Parametrization& par);
/// (-D - phi)(D - phi) == L - chi1 in F[D].
bool param_factorization_check(const Elem& phit, const Potential& pot, const Parametrization& par);
/// rho(phi+) - rho(phi-) == rho(2 mu / phi2) != 0.
bool wronskian_check(const Factorization& fac, const Parametrization& par);

enum class ExponentClass { Integer, RationalRadical, None };
std::string_view exponent_class_name(ExponentClass c);

struct HyperexpFactor {
  MPoly p;   // primitive in the generator
  RatFun n;  // exponent
};

/// Upsilon = e^{exp_rate x} * prod p_i^{n_i} * e^{residual_exponent}.
/// Over an exponential tower dt = a t the first factor is t^{t_exponent},
/// a * t_exponent = exp_rate.
struct HyperexpSolution {
  FieldContext::Ptr field;
  Var t = 0;
  RatFun exp_rate;
  RatFun t_exponent;
  std::vector<HyperexpFactor> rational_factor;
  RatFun residual_exponent;
  ExponentClass classification = ExponentClass::None;

  /// prod p_i^{n_i}; requires integer exponents.
  RatFun rational_part() const;
  std::string str() const;
};

/// Solves D(Y) = phit Y with Y hyperexponential over a rational or
/// exponential tower. Raises UnsupportedTower or NoHyperexponentialSolution.
HyperexpSolution hyperexponential_solve(const Elem& phit);

/// Logarithmic derivative of the assembled solution equals phit.
bool verify_solution(const HyperexpSolution& sol, const Elem& phit);

/// Every constant symbol v replaced by value (e.g. tau -> tau0).
HyperexpSolution specialize_solution(const HyperexpSolution& sol, Var v, const RatFun& value);

/// Normalization for comparing solutions: numerator and denominator made primitive
/// in the generator, so two solutions differing by a constant compare equal.
RatFun normalized_in(const RatFun& r, Var t);

}  // namespace kdvspec
