#include "kdvspec/spectral.hpp"

#include <map>

#include "kdvspec/error.hpp"
#include "kdvspec/linsolve.hpp"

namespace kdvspec {

std::vector<Elem> kdv_values(const Potential& pot, unsigned n, Hierarchy& h) {
  std::vector<Elem> ks;
  for (unsigned l = 0; l <= n; ++l) ks.push_back(dp_substitute(h.kdv(l), pot.u));
  return ks;
}

namespace {

// Coordinates of each k_l over a common denominator, as mono -> coefficient.
std::vector<std::map<Monomial, RatFun>> coordinate_maps(const std::vector<Elem>& ks) {
  MPoly den = common_denominator(ks);
  std::vector<std::map<Monomial, RatFun>> out;
  for (const auto& k : ks) {
    std::map<Monomial, RatFun> m;
    for (auto& c : fe_coordinates(k, den)) m.emplace(c.mono, c.coef);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

LevelResult kdv_level(const Potential& pot, unsigned s_max, Hierarchy& h) {
  if (s_max < 1) raise(ErrorCode::InvalidArgument, "s_max must be >= 1");
  std::vector<Elem> ks{dp_substitute(h.kdv(0), pot.u)};
  for (unsigned n = 1; n <= s_max; ++n) {
    ks.push_back(dp_substitute(h.kdv(n), pot.u));
    auto coords = coordinate_maps(ks);
    std::map<Monomial, std::size_t> rows;
    for (const auto& m : coords)
      for (const auto& [mono, c] : m) rows.emplace(mono, 0);
    std::size_t r = 0;
    for (auto& [mono, idx] : rows) idx = r++;
    // sum_{i=1..n} c_i k_{n-i} = -k_n
    SymMatrix a(rows.size(), n);
    std::vector<RatFun> b(rows.size());
    for (unsigned i = 1; i <= n; ++i)
      for (const auto& [mono, c] : coords[n - i]) a(rows[mono], i - 1) = c;
    for (const auto& [mono, c] : coords[n]) b[rows[mono]] = -c;
    LinearSolution sol = solve_linear(std::move(a), std::move(b));
    if (!sol.consistent) continue;
    if (!sol.nullspace.empty())
      raise(ErrorCode::Underdetermined, "constants at level " + std::to_string(n) + " are not unique");
    return {n, sol.particular, ks};
  }
  raise(ErrorCode::LevelNotFound, pot.label + ": no KdV level <= " + std::to_string(s_max));
}

Elem kdv_ext_value(const Potential& pot, const std::vector<RatFun>& xi, Hierarchy& h) {
  const unsigned n = static_cast<unsigned>(xi.size());
  auto ks = kdv_values(pot, n, h);
  Elem form = ks[n];
  for (unsigned i = 1; i <= n; ++i) form += ks[n - i] * pot.u.lift(xi[i - 1]);
  return form;
}

FlagSpaces flag_spaces(const Potential& pot, const LevelResult& level, unsigned n, Hierarchy& h) {
  if (n <= level.s)
    raise(ErrorCode::IndexBelowLevel, "flag index " + std::to_string(n) + " must exceed the level " + std::to_string(level.s));
  FlagSpaces out;
  out.n = n;
  for (unsigned j = 0; j + level.s < n; ++j) {
    std::vector<RatFun> v(n);
    v[j] = RatFun(1);
    for (unsigned i = 0; i < level.s; ++i) v[j + 1 + i] = level.cbar[i];
    out.basis.push_back(std::move(v));
  }
  out.representative.assign(n, RatFun());
  for (unsigned i = 0; i < level.s; ++i) out.representative[i] = level.cbar[i];

  // Shifted copies of (1, cbar) satisfy KdV_m(u, (cbar, 0, ...)) = const * k_0
  // only up to that constant (the integration constant of f_{m+1}); it is
  // absorbed in the coordinate multiplying k_0.
  auto ks = kdv_values(pot, n, h);
  auto residual = [&](const std::vector<RatFun>& v, bool affine) {
    Elem form = affine ? ks[n] : pot.u.zero_like();
    for (unsigned i = 1; i <= n; ++i) form += ks[n - i] * pot.u.lift(v[i - 1]);
    return form;
  };
  auto absorb = [&](std::vector<RatFun>& v, bool affine) {
    Elem r = residual(v, affine);
    if (r.is_zero()) return;
    Elem d = -(r / ks[0]);
    if (d.is_free_of_generators() && d.derivative().is_zero()) v[n - 1] += d.value();
  };
  for (auto& v : out.basis) absorb(v, false);
  absorb(out.representative, true);
  bool ok = true;
  for (const auto& v : out.basis) ok = ok && residual(v, false).is_zero();
  out.verified = ok && residual(out.representative, true).is_zero();
  return out;
}

FieldOp build_A(const Potential& pot, const std::vector<RatFun>& constants, Hierarchy& h) {
  const unsigned n = static_cast<unsigned>(constants.size());
  std::map<Var, RatFun> cs;
  for (unsigned i = 1; i <= n; ++i) cs[sym::c(i)] = constants[i - 1];
  FormalOp p = h.p_hat(n);
  std::vector<Elem> coeffs;
  for (const auto& a : p.coeffs()) coeffs.push_back(dp_substitute(a, pot.u, cs));
  return FieldOp(std::move(coeffs));
}

bool centralizer_check(const Potential& pot, const std::vector<RatFun>& constants) {
  FieldOp a = build_A(pot, constants);
  return op_commutator(a, schrodinger(pot.u)).is_zero();
}

Elem lambda_in(const FieldContext::Ptr& ctx) { return Elem(ctx, RatFun::var(sym::lambda())); }
Elem mu_in(const FieldContext::Ptr& ctx) { return Elem(ctx, RatFun::var(sym::mu())); }

FieldOp schrodinger_minus(const Elem& u, const Elem& c) { return schrodinger(u) - FieldOp::constant(c); }

CurvePoly spectral_curve(const Potential& pot, const LevelResult& level, DetMode mode) {
  const auto& ctx = pot.u.context();
  FieldOp p = schrodinger_minus(pot.u, lambda_in(ctx));
  FieldOp q = build_A(pot, level) - FieldOp::constant(mu_in(ctx));
  Elem f = diff_resultant(p, q, mode);
  if (!f.is_free_of_generators() || !f.derivative().is_zero())
    raise(ErrorCode::NonConstantCoefficient, "resultant has nonconstant coefficients: " + f.str());
  const RatFun& v = f.value();
  Var mu = sym::mu();
  MPoly c2 = v.num().coefficient(mu, 2);
  if (v.num().degree(mu) != 2 || c2.is_zero() || c2.contains(sym::lambda()))
    raise(ErrorCode::ShapeMismatch, "expected -mu^2 - R(lambda), got " + f.str());
  RatFun normalized = v / RatFun(-c2, v.den());
  if (!normalized.is_polynomial()) raise(ErrorCode::ShapeMismatch, "curve is not polynomial: " + normalized.str());
  MPoly fpoly = normalized.num();
  MPoly R = -(fpoly + MPoly::var(mu, 2));
  if (R.contains(mu)) raise(ErrorCode::ShapeMismatch, "curve has a term linear in mu: " + fpoly.str());
  CurvePoly out;
  out.s = level.s;
  out.f = fpoly;
  out.R = R;
  out.base = ctx;
  out.field = ctx->with_relation(mu, -R, ctx->name() + "(Gamma_" + std::to_string(level.s) + ")");
  return out;
}

Elem curve_reduce(const RatFun& p, const CurvePoly& curve) { return Elem(curve.field, p); }

Elem curve_invert(const Elem& e, const CurvePoly& curve) {
  Elem r = e.in(curve.field);
  if (r.is_zero()) raise(ErrorCode::ZeroOnCurve, "element vanishes on the curve");
  return r.inverse();
}

CurveParts curve_parts(const Elem& e) {
  Var mu = sym::mu();
  return {e.value().num().coefficient(mu, 0), e.value().num().coefficient(mu, 1), e.value().den()};
}

Factorization factor_on_curve(const Potential& pot, const LevelResult& level, const CurvePoly& curve) {
  const auto& ctx = pot.u.context();
  FieldOp p = schrodinger_minus(pot.u, lambda_in(ctx));
  FieldOp q = build_A(pot, level) - FieldOp::constant(mu_in(ctx));
  auto [s10, s11] = subresultant_L1(p, q);
  if (s11.is_zero()) raise(ErrorCode::ZeroSubresultant, "det S_1^1 vanishes");
  Factorization fac;
  fac.s10 = s10;
  fac.s11 = s11;
  fac.phi2 = s11;
  fac.alpha = -s10 - mu_in(ctx);
  fac.phi_plus = curve_reduce((-s10.value()) / s11.value(), curve);
  if (fac.phi_plus.is_zero()) raise(ErrorCode::ZeroSubresultant, "phi vanishes on the curve");
  fac.phi_minus = Elem(curve.field, curve.field->conjugate(fac.phi_plus.value(), sym::mu()));
  return fac;
}

bool riccati_check(const Elem& phi, const Potential& pot, const CurvePoly& curve) {
  Elem p = phi.in(curve.field);
  Elem r = p.derivative() + p * p - pot.u.in(curve.field) + lambda_in(curve.field);
  return r.is_zero();
}

IdentityReport solution_identities(const Factorization& fac, const CurvePoly& curve, const Potential& pot) {
  IdentityReport rep;
  Elem two_mu = mu_in(curve.field).scaled(2);
  rep.difference = fac.phi_plus - fac.phi_minus == two_mu / fac.phi2.in(curve.field);
  const Elem& f = fac.phi2;
  Elem d1 = f.derivative(), d3 = d1.derivative().derivative();
  Elem ul = pot.u - lambda_in(pot.u.context());
  rep.fundamental = (d3 - ul * d1 * pot.u.lift(4) - pot.u.derivative() * f * pot.u.lift(2)).is_zero();
  return rep;
}

SpecializedFactor specialize_at_point(const Potential& pot, const LevelResult& level, const CurvePoly& curve,
                                      const Factorization& fac, const RatFun& lambda0, const RatFun& mu0) {
  std::map<Var, RatFun> point{{sym::lambda(), lambda0}, {sym::mu(), mu0}};
  if (!substitute_all(curve.f, point).is_zero())
    raise(ErrorCode::NotOnCurve, "(" + lambda0.str() + ", " + mu0.str() + ") is not on f = " + curve.f.str());
  Elem phi2 = fac.phi2.substitute(sym::lambda(), lambda0);
  if (phi2.is_zero()) raise(ErrorCode::VanishingPhi2, "phi2 vanishes at lambda0 = " + lambda0.str());
  Elem alpha = fac.alpha.substitute(sym::lambda(), lambda0);
  SpecializedFactor out;
  out.lambda0 = lambda0;
  out.mu0 = mu0;
  out.in_Z = mu0.is_zero();
  out.phi0 = (pot.u.lift(mu0) + alpha) / phi2;

  const Elem one = pot.u.one_like();
  FieldOp left({-out.phi0, -one}), right({-out.phi0, one});
  FieldOp l0 = schrodinger_minus(pot.u, pot.u.lift(lambda0));
  out.factorization_verified = op_mul(left, right) == l0;
  FieldOp a0 = build_A(pot, level) - FieldOp::constant(pot.u.lift(mu0));
  FieldOp g = op_right_gcd(l0, a0);
  out.gcd_order_one = g.order() == 1 && g == right;
  return out;
}

SpecializedFactor specialize_at_point(const Potential& pot, const LevelResult& level, const CurvePoly& curve,
                                      const RatFun& lambda0, const RatFun& mu0) {
  return specialize_at_point(pot, level, curve, factor_on_curve(pot, level, curve), lambda0, mu0);
}

}  // namespace kdvspec
