#include "kdvspec/param_solve.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "kdvspec/error.hpp"
#include "kdvspec/upoly.hpp"

namespace kdvspec {

namespace {

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Int rn = sqrt(n), rd = sqrt(d);
  return Rat(rn, rd);
}

struct OddEven {
  MPoly A, B;  // S = c * A * B^2, A squarefree
};

OddEven split_square(const MPoly& s, Var v) {
  auto dec = squarefree_decomposition(s, v);
  OddEven out{MPoly(1), MPoly(1)};
  for (std::size_t i = 0; i < dec.size(); ++i) {
    const unsigned mult = static_cast<unsigned>(i + 1);
    if (mult % 2 == 1) out.A *= dec[i];
    if (mult >= 2) out.B *= dec[i].pow(mult / 2);
  }
  return out;
}

bool is_eta_tower(const FieldContext& ctx) {
  return ctx.kind() == TowerKind::Exponential && ctx.generators() == std::vector<Var>{sym::eta()} &&
         ctx.derivation().at(sym::eta()) == RatFun::var(sym::eta());
}

// Exponent parity of eta in p: 0 or 1 when uniform, nullopt otherwise.
std::optional<unsigned> eta_parity(const MPoly& p) {
  std::optional<unsigned> par;
  for (const auto& t : p) {
    unsigned e = t.mono.degree(sym::eta()) % 2;
    if (par && *par != e) return std::nullopt;
    par = e;
  }
  return par;
}

MPoly eta_to_w(const MPoly& p, unsigned parity) {
  std::vector<MPoly::Term> terms;
  for (const auto& t : p) {
    std::uint32_t k = (t.mono.degree(sym::eta()) - parity) / 2;
    terms.push_back({t.mono.without(sym::eta()).with_exp(sym::w(), k), t.coef});
  }
  return MPoly::from_terms(std::move(terms));
}

std::optional<RatFun> even_in_eta(const RatFun& r) {
  auto pn = eta_parity(r.num()), pd = eta_parity(r.den());
  if (r.is_zero()) return RatFun();
  if (!pn || !pd || *pn != *pd) return std::nullopt;
  return RatFun(eta_to_w(r.num(), *pn), eta_to_w(r.den(), *pd));
}

Elem into(const RatFun& v, const FieldContext::Ptr& target) {
  if (target == w_tower()) {
    auto c = even_in_eta(v);
    if (!c) raise(ErrorCode::BasisMismatch, "element is not a function of eta^2: " + v.str());
    return Elem(target, *c);
  }
  return Elem(target, v);
}

std::map<Var, RatFun> rho_map(const Parametrization& par) {
  return {{sym::lambda(), par.chi1}, {sym::mu(), par.chi2}};
}

}  // namespace

unsigned hyperelliptic_genus(const CurvePoly& curve) {
  OddEven ab = split_square(-curve.R, sym::lambda());
  unsigned d = ab.A.degree(sym::lambda());
  return d == 0 ? 0 : (d - 1) / 2;
}

std::string_view param_kind_name(ParamKind k) {
  return k == ParamKind::Rational ? "rational" : "weierstrass-pair";
}

Parametrization parametrize_curve(const CurvePoly& curve, int sign) {
  if (sign != 1 && sign != -1) raise(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  const Var lam = sym::lambda();
  const MPoly S = -curve.R;
  const unsigned genus = hyperelliptic_genus(curve);
  Parametrization par;
  par.sign = sign;
  if (genus == 0) {
    OddEven ab = split_square(S, lam);
    if (ab.A.degree(lam) != 1)
      raise(ErrorCode::UnsupportedShape, "genus 0 curve outside the lambda*q(lambda)^2 family: mu^2 = " + S.str());
    RatFun r = RatFun(-ab.A.coefficient(lam, 0)) / RatFun(ab.A.coefficient(lam, 1));
    if (r.contains(lam)) raise(ErrorCode::UnsupportedShape, "branch point depends on lambda");
    const unsigned dB = ab.B.degree(lam);
    RatFun lcB(ab.B.coefficient(lam, dB));
    if (dB % 2 == 1) lcB = -lcB;
    // S = kappa (r - lambda) qhat(r - lambda)^2 with qhat monic
    RatFun kappa = RatFun(S) * lcB * lcB / ((r - RatFun::var(lam)) * RatFun(ab.B * ab.B));
    if (!kappa.is_constant())
      raise(ErrorCode::UnsupportedShape, "leading factor of mu^2 is not a rational constant: " + kappa.str());
    auto k = rational_sqrt(kappa.constant_value());
    if (!k) raise(ErrorCode::UnsupportedShape, "leading factor " + kappa.str() + " is not a rational square");
    RatFun tau = RatFun::var(sym::tau());
    par.kind = ParamKind::Rational;
    par.chi1 = r - tau * tau;
    RatFun qhat = substitute_all(ab.B, {{lam, par.chi1}}) / lcB;
    par.chi2 = (tau * qhat).scaled(*k * sign);
    par.field = curve.base;
  } else if (genus == 1) {
    const Relation* rel = curve.base->kind() == TowerKind::Weierstrass ? curve.base->relation_for(sym::dwp()) : nullptr;
    if (!rel) raise(ErrorCode::UnsupportedShape, "genus 1 curve over a tower without a Weierstrass relation");
    MPoly normal = rel->square.substitute(sym::wp(), -MPoly::var(lam)).scaled(make_rat(-1, 4));
    if (normal != curve.R)
      raise(ErrorCode::UnsupportedShape, "genus 1 curve not in the normal form mu^2 = -lambda^3 + g2/4 lambda - g3/4: mu^2 = " + S.str());
    par.kind = ParamKind::WeierstrassPair;
    par.chi1 = RatFun(-MPoly::var(sym::wpt()));
    par.chi2 = RatFun(MPoly::var(sym::dwpt()).scaled(make_rat(-sign, 2)));
    par.field = curve.base->with_relation(sym::dwpt(), rel->square.substitute(sym::wp(), MPoly::var(sym::wpt())),
                                          curve.base->name() + "(wp(tau), dwp(tau))");
  } else {
    raise(ErrorCode::UnsupportedShape, "genus " + std::to_string(genus) +
                                           ": no algorithm is known to compute a global parametrization");
  }
  par.verified = parametrization_identity(curve, par);
  if (!par.verified) raise(ErrorCode::UnsupportedShape, "parametrization does not satisfy f(chi1, chi2) = 0");
  return par;
}

bool parametrization_identity(const CurvePoly& curve, const Parametrization& par) {
  return Elem(par.field, substitute_all(curve.f, rho_map(par))).is_zero();
}

Elem substitute_param(const Elem& e, const Parametrization& par) {
  RatFun v = substitute_all(e.value(), rho_map(par));
  if (is_eta_tower(*par.field) && even_in_eta(v)) return into(v, w_tower());
  return Elem(par.field, v);
}

Elem param_lift(const Elem& e, const Parametrization& par, const Elem& like) {
  RatFun v = substitute_all(e.value(), rho_map(par));
  return into(v, like.context() ? like.context() : par.field);
}

bool riccati_check_param(const Elem& phit, const Potential& pot, const Parametrization& par) {
  Elem u = param_lift(pot.u, par, phit);
  Elem chi1 = u.lift(par.chi1);
  Elem p = phit.in(u.context());
  return (p.derivative() + p * p - u + chi1).is_zero();
}

bool param_factorization_check(const Elem& phit, const Potential& pot, const Parametrization& par) {
  Elem u = param_lift(pot.u, par, phit);
  Elem p = phit.in(u.context());
  const Elem one = u.one_like();
  FieldOp left({-p, -one}), right({-p, one});
  return op_mul(left, right) == schrodinger_minus(u, u.lift(par.chi1));
}

bool wronskian_check(const Factorization& fac, const Parametrization& par) {
  const auto& cf = fac.phi_plus.context();
  Elem diff = substitute_param(fac.phi_plus, par) - substitute_param(fac.phi_minus, par);
  Elem w = substitute_param(mu_in(cf).scaled(2) / fac.phi2.in(cf), par);
  return !diff.is_zero() && diff == w.in(diff.context());
}

std::string_view exponent_class_name(ExponentClass c) {
  switch (c) {
    case ExponentClass::Integer: return "integer";
    case ExponentClass::RationalRadical: return "rational-radical";
    case ExponentClass::None: return "none";
  }
  return "?";
}

RatFun normalized_in(const RatFun& r, Var t) {
  if (r.is_zero()) return r;
  MPoly n = exact_quotient(r.num(), content_in(r.num(), t));
  MPoly d = exact_quotient(r.den(), content_in(r.den(), t));
  return RatFun(n.primitive(), d.primitive());
}

RatFun HyperexpSolution::rational_part() const {
  RatFun acc(1);
  for (const auto& f : rational_factor) {
    if (!f.n.is_constant() || !is_integer(f.n.constant_value()))
      raise(ErrorCode::InvalidArgument, "factor exponent " + f.n.str() + " is not an integer");
    long e = f.n.constant_value().get_num().get_si();
    acc *= RatFun(f.p).pow(static_cast<int>(e));
  }
  return normalized_in(acc, t);
}

std::string HyperexpSolution::str() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " * ";
    first = false;
  };
  bool integral = classification == ExponentClass::Integer;
  if (integral) {
    RatFun r = rational_part();
    if (!r.is_one()) {
      sep();
      os << '(' << r.str() << ')';
    }
  } else {
    for (const auto& f : rational_factor) {
      sep();
      os << '(' << f.p.str() << ")^(" << f.n.str() << ')';
    }
  }
  const auto& ctx = *field;
  if (ctx.kind() == TowerKind::Exponential) {
    if (!t_exponent.is_zero()) {
      sep();
      os << sym::name(t) << "^(" << t_exponent.str() << ')';
    }
  } else if (!exp_rate.is_zero()) {
    sep();
    if (exp_rate.is_one())
      os << "exp(x)";
    else if (exp_rate.is_constant())
      os << "exp(" << exp_rate.str() << "*x)";
    else
      os << "exp((" << exp_rate.str() << ")*x)";
  }
  if (!residual_exponent.is_zero()) {
    sep();
    os << "exp(" << residual_exponent.str() << ')';
  }
  if (first) os << '1';
  return os.str();
}

namespace {

struct Hermite {
  RatFun g;      // rational part
  UPoly a, d;    // a/d with squarefree d, deg a < deg d
};

Hermite hermite_reduce(UPoly a, const UPoly& d) {
  Hermite out;
  UPoly dm = up_gcd(d, d.derivative());
  UPoly ds = up_exact_div(d, dm);
  while (dm.degree() > 0) {
    UPoly dm2 = up_gcd(dm, dm.derivative());
    UPoly dms = up_exact_div(dm, dm2);
    UPoly lhs = -up_exact_div(ds * dm.derivative(), dm);
    auto [b, c] = up_diophantine(lhs, dms, a);
    a = c - up_exact_div(b.derivative() * ds, dms);
    out.g += b.to_ratfun() / dm.to_ratfun();
    dm = dm2;
  }
  UPoly g0 = up_gcd(a, ds);
  out.a = up_exact_div(a, g0);
  out.d = up_exact_div(ds, g0);
  return out;
}

bool constant_in(const RatFun& r, const FieldContext& ctx) {
  for (Var g : ctx.generators())
    if (r.contains(g)) return false;
  return true;
}

// Residues at the roots of d that are rational numbers (Rothstein-Trager
// resultant with the constants split off), then any leftover linear factor.
std::vector<std::pair<UPoly, RatFun>> log_part(const UPoly& a, const UPoly& d) {
  const Var t = d.var(), z = sym::z();
  std::vector<std::pair<UPoly, RatFun>> out;
  if (d.degree() <= 0) return out;
  RatFun q = a.to_ratfun() / d.to_ratfun();
  const MPoly& num = q.num();
  const MPoly& den = q.den();
  MPoly rhs = num - MPoly::var(z) * den.derivative(t);
  const unsigned m = den.degree(t), n = rhs.degree(t);
  PolyMatrix syl(m + n, m + n);
  auto cd = den.coefficients(t), cr = rhs.coefficients(t);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k <= m; ++k) syl(i, i + (m - k)) = cd[k];
  for (unsigned i = 0; i < m; ++i)
    for (unsigned k = 0; k <= n; ++k) syl(n + i, i + (n - k)) = cr[k];
  MPoly res = n == 0 ? rhs.pow(m) : det_bareiss(std::move(syl));
  // coefficient polynomials in z of each monomial in the remaining constants
  std::map<Monomial, std::vector<MPoly::Term>> groups;
  for (const auto& term : res)
    groups[term.mono.without(z)].push_back({Monomial().with_exp(z, term.mono.degree(z)), term.coef});
  MPoly gz;
  for (auto& [mono, terms] : groups) gz = gcd(gz, MPoly::from_terms(std::move(terms)));
  UPoly rest = d;
  if (!gz.is_zero() && gz.degree(z) > 0) {
    for (const Rat& zi : rational_roots(gz, z)) {
      UPoly v = up_gcd(d, a - d.derivative().scaled(RatFun(zi)));
      if (v.degree() <= 0) continue;
      out.emplace_back(v, RatFun(zi));
      rest = up_exact_div(rest, v);
    }
  }
  if (rest.degree() == 1) {
    RatFun root = -rest.coeff(0) / rest.coeff(1);
    out.emplace_back(rest.monic(), a.eval(root) / d.derivative().eval(root));
  } else if (rest.degree() > 1) {
    raise(ErrorCode::NoHyperexponentialSolution,
          "denominator factor " + rest.str() + " has residues outside Q; no linear splitting found");
  }
  return out;
}

}  // namespace

HyperexpSolution hyperexponential_solve(const Elem& phit) {
  const auto& ctx = phit.context();
  if (!ctx) raise(ErrorCode::InvalidArgument, "element without field context");
  if (ctx->kind() == TowerKind::Weierstrass)
    raise(ErrorCode::UnsupportedTower, "closed-form solutions over the Weierstrass tower need sigma/zeta functions");
  if (ctx->generators().size() != 1 || !ctx->relations().empty())
    raise(ErrorCode::UnsupportedTower, "expected a one-generator rational or exponential tower: " + ctx->name());
  const Var t = ctx->generators()[0];
  const RatFun dt = ctx->derivation().at(t);
  HyperexpSolution sol;
  sol.field = ctx;
  sol.t = t;

  // d/dt log Y = psi
  RatFun psi = phit.value();
  RatFun rate;
  const bool expo = ctx->kind() == TowerKind::Exponential;
  if (expo) {
    rate = dt / RatFun::var(t);
    if (!constant_in(rate, *ctx)) raise(ErrorCode::UnsupportedTower, "derivation is not dt = a*t");
    psi = psi / (rate * RatFun::var(t));
  } else if (dt != RatFun(1)) {
    raise(ErrorCode::UnsupportedTower, "rational tower needs dt = 1");
  }

  UPoly num = UPoly::from_mpoly(t, psi.num()), den = UPoly::from_mpoly(t, psi.den());
  auto [poly, a] = divmod(num, den);
  Hermite h = hermite_reduce(a, den);
  auto [p2, a2] = divmod(h.a, h.d);
  poly = poly + p2;
  UPoly rem = a2, d = h.d;

  // polynomial part: integrate
  RatFun integral;
  for (int i = 0; i <= poly.degree(); ++i) {
    RatFun c = poly.coeff(i);
    if (c.is_zero()) continue;
    if (!expo && i == 0) {
      sol.exp_rate = c;
      continue;
    }
    integral += c.scaled(Rat(1, i + 1)) * RatFun(MPoly::var(t, static_cast<std::uint32_t>(i + 1)));
  }
  sol.residual_exponent = integral + h.g;

  // simple pole at t = 0 split off first
  if (d.degree() > 0 && d.coeff(0).is_zero()) {
    UPoly d1 = up_exact_div(d, UPoly::monomial(t, 1));
    RatFun r0 = rem.coeff(0) / d1.coeff(0);
    UPoly shifted = rem - d1.scaled(r0);
    rem = up_exact_div(shifted, UPoly::monomial(t, 1));
    d = d1;
    if (expo) {
      sol.t_exponent = r0;
      sol.exp_rate = r0 * rate;
    } else {
      sol.rational_factor.push_back({MPoly::var(t), r0});
    }
  }
  for (auto& [v, n] : log_part(rem, d)) {
    RatFun vr = v.to_ratfun();
    MPoly p = exact_quotient(vr.num(), content_in(vr.num(), t)).primitive();
    sol.rational_factor.push_back({p, n});
  }

  bool all_int = true, all_rat = true;
  for (const auto& f : sol.rational_factor) {
    if (!f.n.is_constant()) {
      all_rat = all_int = false;
      break;
    }
    if (!is_integer(f.n.constant_value())) all_int = false;
  }
  if (!all_rat) {
    std::string ns;
    for (const auto& f : sol.rational_factor) ns += " " + f.n.str();
    raise(ErrorCode::NoHyperexponentialSolution, "non-rational residues:" + ns);
  }
  sol.classification = all_int ? ExponentClass::Integer : ExponentClass::RationalRadical;
  return sol;
}

bool verify_solution(const HyperexpSolution& sol, const Elem& phit) {
  if (!sol.field) return false;
  Elem acc(sol.field, sol.exp_rate);
  for (const auto& f : sol.rational_factor) {
    Elem p(sol.field, RatFun(f.p));
    acc += p.derivative() / p * acc.lift(f.n);
  }
  acc += Elem(sol.field, sol.residual_exponent).derivative();
  return acc == phit.in(sol.field);
}

HyperexpSolution specialize_solution(const HyperexpSolution& sol, Var v, const RatFun& value) {
  HyperexpSolution out = sol;
  out.exp_rate = sol.exp_rate.substitute(v, value);
  out.t_exponent = sol.t_exponent.substitute(v, value);
  out.residual_exponent = sol.residual_exponent.substitute(v, value);
  out.rational_factor.clear();
  for (const auto& f : sol.rational_factor) {
    RatFun p = RatFun(f.p).substitute(v, value);
    if (p.is_constant()) continue;
    out.rational_factor.push_back({normalized_in(p, sol.t).num(), f.n.substitute(v, value)});
  }
  return out;
}

}  // namespace kdvspec
