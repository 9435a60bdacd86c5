#include "properties.hpp"

#include <random>

#include "kdvspec/error.hpp"
#include "kdvspec/matrix.hpp"
#include "kdvspec/param_solve.hpp"

namespace kdvspec::props {

namespace {

class Gen {
public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rat rat(int span = 3) {
    int d = range(1, 3);
    Rat r(range(-span, span), d);
    r.canonicalize();
    return r;
  }
  Rat nonzero_rat(int span = 3) {
    Rat r;
    while (r == 0) r = rat(span);
    return r;
  }

  /// Sum of `terms` random monomials in vars with exponents <= max_deg.
  MPoly poly(const std::vector<Var>& vars, int terms, int max_deg) {
    MPoly p;
    for (int t = 0; t < terms; ++t) {
      MPoly m(rat());
      for (Var v : vars) {
        int e = range(0, max_deg);
        if (e) m = m * MPoly::var(v, static_cast<std::uint32_t>(e));
      }
      p += m;
    }
    return p;
  }
  MPoly nonzero_poly(const std::vector<Var>& vars, int terms, int max_deg) {
    MPoly p;
    while (p.is_zero()) p = poly(vars, terms, max_deg);
    return p;
  }
  /// Nonconstant polynomial in v of degree 1 or 2.
  MPoly factor_in(Var v) {
    MPoly p;
    while (p.degree(v) == 0) {
      p = MPoly(range(-3, 3));
      for (std::uint32_t k = 1; k <= static_cast<std::uint32_t>(range(1, 2)); ++k)
        p += MPoly::var(v, k).scaled(Rat(range(-3, 3)));
    }
    return p;
  }
  RatFun ratfun(const std::vector<Var>& vars, int max_deg) {
    return RatFun(poly(vars, range(1, 3), max_deg), nonzero_poly(vars, range(1, 2), max_deg));
  }

private:
  std::mt19937 rng_;
};

}  // namespace

SuiteResult leibniz(unsigned seed, int cases) {
  Gen g(seed);
  Potential rat1 = family_potential(Family::Rational, 1);
  CurvePoly curve = spectral_curve(rat1, kdv_level(rat1));
  struct Tower {
    FieldContext::Ptr ctx;
    std::vector<Var> vars;
  };
  std::vector<Tower> towers{{FieldContext::rational(), {sym::x(), sym::tau()}},
                            {eta_tower(), {sym::eta(), sym::lambda()}},
                            {FieldContext::weierstrass(), {sym::wp(), sym::dwp(), sym::g2()}},
                            {curve.field, {sym::x(), sym::mu(), sym::lambda()}}};
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const Tower& t = towers[static_cast<std::size_t>(i) % towers.size()];
    Elem a(t.ctx, g.ratfun(t.vars, 2)), b(t.ctx, g.ratfun(t.vars, 2));
    if ((a * b).derivative() != a.derivative() * b + a * b.derivative()) ++failures;
    if ((a + b).derivative() != a.derivative() + b.derivative()) ++failures;
  }
  return {cases, failures};
}

SuiteResult integrate_derive(unsigned seed, int cases) {
  Gen g(seed);
  std::vector<Var> jets{sym::u_derivative(0), sym::u_derivative(1), sym::u_derivative(2), sym::u_derivative(3),
                        sym::c(1)};
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    // every term carries a jet: u-free terms are integration constants
    MPoly p;
    for (int t = g.range(1, 4); t > 0; --t)
      p += g.poly(jets, 1, 2) * MPoly::var(jets[static_cast<std::size_t>(g.range(0, 3))]);
    DiffPoly d(p);
    if (dp_integrate(dp_derive(d)) != d) ++failures;
  }
  return {cases, failures};
}

SuiteResult op_mul_associative(unsigned seed, int cases) {
  Gen g(seed);
  auto q = FieldContext::rational();
  auto random_op = [&] {
    std::vector<Elem> c;
    int n = g.range(0, 2);
    for (int k = 0; k <= n; ++k) c.emplace_back(q, g.ratfun({sym::x()}, 2));
    if (c.back().is_zero()) c.back() = Elem(q, RatFun(1));
    return FieldOp(c);
  };
  std::vector<Var> jets{sym::u_derivative(0), sym::u_derivative(1), sym::c(1)};
  auto random_formal = [&] {
    std::vector<DiffPoly> c;
    int n = g.range(0, 2);
    for (int k = 0; k <= n; ++k) c.emplace_back(g.poly(jets, 2, 1));
    return FormalOp(c);
  };
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    if (i % 2 == 0) {
      FieldOp a = random_op(), b = random_op(), c = random_op();
      if (!(op_mul(op_mul(a, b), c) - op_mul(a, op_mul(b, c))).is_zero()) ++failures;
    } else {
      FormalOp a = random_formal(), b = random_formal(), c = random_formal();
      if (!(op_mul(op_mul(a, b), c) - op_mul(a, op_mul(b, c))).is_zero()) ++failures;
    }
  }
  return {cases, failures};
}

SuiteResult curve_invert(unsigned seed, int cases) {
  Gen g(seed);
  std::vector<std::pair<CurvePoly, std::vector<Var>>> curves;
  for (auto [f, s, gen] : {std::tuple{Family::Rational, 1u, sym::x()}, std::tuple{Family::Rational, 2u, sym::x()},
                           std::tuple{Family::RosenMorse, 1u, sym::eta()}}) {
    Potential p = family_potential(f, s);
    curves.emplace_back(spectral_curve(p, kdv_level(p)), std::vector<Var>{gen, sym::lambda()});
  }
  int failures = 0, tried = 0;
  for (int i = 0; tried < cases; ++i) {
    const auto& [curve, vars] = curves[static_cast<std::size_t>(i) % curves.size()];
    Elem mu = mu_in(curve.field);
    Elem e = Elem(curve.field, g.ratfun(vars, 2)) + Elem(curve.field, g.ratfun(vars, 2)) * mu;
    if (e.is_zero()) continue;
    ++tried;
    if (!(kdvspec::curve_invert(e, curve) * e).is_one()) ++failures;
  }
  return {tried, failures};
}

SuiteResult determinant(unsigned seed, int cases) {
  Gen g(seed);
  std::vector<Var> vars{sym::x(), sym::lambda(), sym::mu()};
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    std::size_t n = static_cast<std::size_t>(1 + i % 4);
    SymMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = g.range(0, 4) == 0 ? RatFun() : RatFun(g.poly(vars, g.range(1, 2), 1));
    RatFun a = kdvspec::determinant(m, DetMode::Bareiss), b = kdvspec::determinant(m, DetMode::Cofactor);
    if (a != b) ++failures;
  }
  return {cases, failures};
}

SuiteResult solver_soundness(unsigned seed, int cases) {
  Gen g(seed);
  auto q = FieldContext::rational();
  auto e = eta_tower();
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const bool exp_tower = i % 3 == 1;
    const Var t = exp_tower ? sym::eta() : sym::x();
    const auto& ctx = exp_tower ? e : q;
    Elem phi;
    if (i % 3 == 2) {
      // arbitrary input: whatever the solver returns must verify
      phi = Elem(ctx, g.ratfun({t}, 2));
    } else {
      // logarithmic derivative of prod p_i^{n_i} times an exponential
      Elem y(ctx, RatFun(1));
      Elem dlog(ctx, RatFun(Rat(g.range(-2, 2))));
      for (int k = g.range(1, 3); k > 0; --k) {
        Elem p(ctx, RatFun(g.factor_in(t)));
        Rat n = g.range(0, 3) == 0 ? Rat(g.range(-3, 3) * 2 + 1, 2) : Rat(g.range(-2, 2));
        if (n == 0) n = 1;
        dlog += p.derivative() / p * Elem(ctx, RatFun(n));
      }
      phi = dlog;
    }
    try {
      HyperexpSolution sol = hyperexponential_solve(phi);
      if (!verify_solution(sol, phi)) ++failures;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NoHyperexponentialSolution) ++failures;
      // constructed logarithmic derivatives always have a solution
      if (i % 3 != 2) ++failures;
    }
  }
  return {cases, failures};
}

}  // namespace kdvspec::props
