#include "doctest.h"

#include "kdvspec/error.hpp"
#include "kdvspec/param_solve.hpp"
#include "kdvspec/parse.hpp"
#include "kdvspec/text.hpp"
#include "kdvspec/upoly.hpp"

using namespace kdvspec;

namespace {

struct Chain {
  Potential pot;
  LevelResult level;
  CurvePoly curve;
  Factorization fac;
};

Chain chain(const Potential& p) {
  LevelResult l = kdv_level(p);
  CurvePoly c = spectral_curve(p, l);
  return {p, l, c, factor_on_curve(p, l, c)};
}

Elem Q(const char* s) { return parse_element(s, FieldContext::rational()); }

}  // namespace

TEST_CASE("rational_roots") {
  Var z = sym::z();
  auto r = rational_roots(parse_poly("(2*z - 3)*(z + 5)^2*z*(z^2 + 1)"), z);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == Rat(-5));
  CHECK(r[1] == Rat(0));
  CHECK(r[2] == Rat(3, 2));
  CHECK(rational_roots(parse_poly("z^2 - 2"), z).empty());
  CHECK(rational_roots(parse_poly("6*z^2 - z - 1"), z).size() == 2);
}

TEST_CASE("up_diophantine") {
  Var x = sym::x();
  UPoly a = UPoly::from_mpoly(x, parse_poly("x^2 + 1"));
  UPoly b = UPoly::from_mpoly(x, parse_poly("x - 3"));
  UPoly c = UPoly::from_mpoly(x, parse_poly("x^3 + 2*x"));
  auto [s, t] = up_diophantine(a, b, c);
  CHECK((s * a + t * b).to_ratfun() == c.to_ratfun());
  CHECK(s.degree() < b.degree());
}

TEST_CASE("genus") {
  CHECK(hyperelliptic_genus(chain(family_potential(Family::Rational, 3)).curve) == 0);
  CHECK(hyperelliptic_genus(chain(family_potential(Family::RosenMorse, 2)).curve) == 0);
  CHECK(hyperelliptic_genus(chain(family_potential(Family::Elliptic, 1)).curve) == 1);
  Chain e2 = chain(family_potential(Family::Elliptic, 2));
  CHECK(hyperelliptic_genus(e2.curve) == 2);
  try {
    parametrize_curve(e2.curve);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedShape);
    CHECK(std::string(e.what()).find("genus 2") != std::string::npos);
  }
}

TEST_CASE("rational parametrization and sheets") {
  Chain c = chain(family_potential(Family::Rational, 2));
  Parametrization p = parametrize_curve(c.curve);
  CHECK(p.chi1 == parse_ratfun("-tau^2"));
  CHECK(p.chi2 == parse_ratfun("-tau^5"));
  CHECK(parametrization_identity(c.curve, p));
  Parametrization q = parametrize_curve(c.curve, 1);
  CHECK(q.chi2 == -p.chi2);
  CHECK(parametrization_identity(c.curve, q));
  Elem phit = substitute_param(c.fac.phi_plus, q);
  CHECK(riccati_check_param(phit, c.pot, q));
  CHECK(wronskian_check(c.fac, q));
}

TEST_CASE("rosen-morse images move to w") {
  Chain c = chain(family_potential(Family::RosenMorse, 1));
  Parametrization p = parametrize_curve(c.curve);
  Elem phit = substitute_param(c.fac.phi_plus, p);
  CHECK(phit.context()->name() == w_tower()->name());
  CHECK(riccati_check_param(phit, c.pot, p));
  CHECK(param_factorization_check(phit, c.pot, p));
}

TEST_CASE("negative checks") {
  Chain c = chain(family_potential(Family::Rational, 1));
  Parametrization p = parametrize_curve(c.curve);
  Elem phit = substitute_param(c.fac.phi_plus, p);
  CHECK(riccati_check_param(phit, c.pot, p));
  CHECK_FALSE(riccati_check_param(phit + phit.one_like(), c.pot, p));
  CHECK_FALSE(param_factorization_check(phit + phit.one_like(), c.pot, p));

  HyperexpSolution sol = hyperexponential_solve(phit);
  CHECK(verify_solution(sol, phit));
  HyperexpSolution bad = sol;
  REQUIRE_FALSE(bad.rational_factor.empty());
  bad.rational_factor[0].n = bad.rational_factor[0].n + RatFun(1);
  CHECK_FALSE(verify_solution(bad, phit));
  HyperexpSolution bad_rate = sol;
  bad_rate.exp_rate = bad_rate.exp_rate + RatFun(1);
  CHECK_FALSE(verify_solution(bad_rate, phit));
}

TEST_CASE("rational s=1 solution and its specialization") {
  Chain c = chain(family_potential(Family::Rational, 1));
  Parametrization p = parametrize_curve(c.curve);
  Elem phit = substitute_param(c.fac.phi_plus, p);
  HyperexpSolution sol = hyperexponential_solve(phit);
  CHECK(sol.classification == ExponentClass::Integer);
  CHECK(sol.rational_part() == normalized_in(parse_ratfun("(x*tau - 1)/x"), sym::x()));
  CHECK(sol.exp_rate == parse_ratfun("tau"));
  HyperexpSolution one = specialize_solution(sol, sym::tau(), RatFun(1));
  CHECK(one.rational_part() == parse_ratfun("(x - 1)/x"));
  CHECK(one.exp_rate == RatFun(1));
  CHECK(one.str() == "((x - 1)/x) * exp(x)");
  CHECK(verify_solution(one, phit.substitute(sym::tau(), RatFun(1))));
}

TEST_CASE("solver on hand-made logarithmic derivatives") {
  // y = (x^2 + 1)^2 / x^3 * e^{2x}
  Elem y = Q("(x^2 + 1)^2/x^3");
  Elem phi = y.derivative() / y + Q("2");
  HyperexpSolution a = hyperexponential_solve(phi);
  CHECK(a.classification == ExponentClass::Integer);
  CHECK(a.rational_part() == y.value());
  CHECK(a.exp_rate == RatFun(2));
  CHECK(verify_solution(a, phi));

  HyperexpSolution b = hyperexponential_solve(Q("1/(2*x) + 3/(x - 1)"));
  CHECK(b.classification == ExponentClass::RationalRadical);
  CHECK(verify_solution(b, Q("1/(2*x) + 3/(x - 1)")));

  // y = e^{-1/x}: a non-logarithmic part survives
  HyperexpSolution c = hyperexponential_solve(Q("1/x^2"));
  CHECK_FALSE(c.residual_exponent.is_zero());
  CHECK(verify_solution(c, Q("1/x^2")));

  try {
    hyperexponential_solve(Q("1/(x^2 + 1)"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoHyperexponentialSolution);
  }
}

TEST_CASE("elliptic family") {
  Chain c = chain(family_potential(Family::Elliptic, 1));
  Parametrization p = parametrize_curve(c.curve);
  CHECK(p.kind == ParamKind::WeierstrassPair);
  CHECK(parametrization_identity(c.curve, p));
  Elem phit = substitute_param(c.fac.phi_plus, p);
  CHECK(riccati_check_param(phit, c.pot, p));
  try {
    hyperexponential_solve(phit);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedTower);
  }
}
