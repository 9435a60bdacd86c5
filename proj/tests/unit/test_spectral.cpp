#include "doctest.h"

#include "kdvspec/error.hpp"
#include "kdvspec/parse.hpp"
#include "kdvspec/spectral.hpp"
#include "kdvspec/text.hpp"

using namespace kdvspec;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("levels of the families") {
  CHECK(kdv_level(family_potential(Family::Rational, 3)).s == 3);
  LevelResult rm = kdv_level(family_potential(Family::RosenMorse, 2));
  REQUIRE(rm.s == 2);
  CHECK(rm.cbar[0] == RatFun(5));
  CHECK(rm.cbar[1] == RatFun(4));
  LevelResult el = kdv_level(family_potential(Family::Elliptic, 2));
  REQUIRE(el.s == 2);
  CHECK(el.cbar[1] == parse_ratfun("-21/8*g2"));
  CHECK(code_of([] { kdv_level(family_potential(Family::Rational, 3), 2); }) == ErrorCode::LevelNotFound);
}

TEST_CASE("custom potential from text") {
  Potential p = make_potential(parse_potential("12/x^2", FieldContext::rational()), "u");
  CHECK(kdv_level(p).s == 3);
  // 2/(x - 1)^2 is a translate of the s = 1 rational potential
  Potential q = make_potential(parse_potential("2/(x - 1)^2", FieldContext::rational()), "u");
  LevelResult l = kdv_level(q);
  CHECK(l.s == 1);
  CHECK(spectral_curve(q, l).f == parse_poly("-mu^2 - lambda^3"));
}

TEST_CASE("flag spaces") {
  Potential p = family_potential(Family::RosenMorse, 1);
  LevelResult l = kdv_level(p);
  FlagSpaces f = flag_spaces(p, l, 3);
  CHECK(f.verified);
  CHECK(f.basis.size() == 2);
  CHECK(code_of([&] { flag_spaces(p, l, 1); }) == ErrorCode::IndexBelowLevel);

  // the elliptic representative needs a nonzero last coordinate
  Potential e = family_potential(Family::Elliptic, 1);
  LevelResult le = kdv_level(e);
  FlagSpaces fe = flag_spaces(e, le, 2);
  CHECK(fe.verified);
  CHECK_FALSE(fe.representative[1].is_zero());
  CHECK(kdv_ext_value(e, fe.representative).is_zero());
  CHECK_FALSE(kdv_ext_value(e, {RatFun(), RatFun()}).is_zero());
}

TEST_CASE("spectral curves") {
  Potential p = family_potential(Family::RosenMorse, 2);
  LevelResult l = kdv_level(p);
  CurvePoly c = spectral_curve(p, l);
  CHECK(c.R == parse_poly("lambda*(lambda + 1)^2*(lambda + 4)^2"));
  CHECK(spectral_curve(p, l, DetMode::Cofactor).f == c.f);
  CHECK(centralizer_check(p, l));
  CHECK_FALSE(centralizer_check(p, {RatFun(4), RatFun(5)}));
  CurvePoly e = spectral_curve(family_potential(Family::Elliptic, 1), kdv_level(family_potential(Family::Elliptic, 1)));
  CHECK(e.f == parse_poly("-mu^2 - lambda^3 + 1/4*lambda*g2 - 1/4*g3"));
}

TEST_CASE("curve arithmetic") {
  Potential p = family_potential(Family::Rational, 1);
  CurvePoly c = spectral_curve(p, kdv_level(p));
  Elem m = mu_in(c.field);
  CHECK(curve_reduce(parse_ratfun("mu^2 + lambda^3"), c).is_zero());
  Elem a = m + lambda_in(c.field);
  CHECK((curve_invert(a, c) * a).is_one());
  CHECK(code_of([&] { curve_invert(m * m + lambda_in(c.field).pow(3), c); }) == ErrorCode::ZeroOnCurve);
  CurveParts parts = curve_parts(Elem(c.field, parse_ratfun("(x*mu + 1)/(lambda + 2)")));
  CHECK(parts.b == parse_poly("x"));
  CHECK(parts.Lambda == parse_poly("lambda + 2"));
}

TEST_CASE("factorization on the curve") {
  for (unsigned s = 1; s <= 2; ++s) {
    CAPTURE(s);
    Potential p = family_potential(Family::Rational, s);
    LevelResult l = kdv_level(p);
    CurvePoly c = spectral_curve(p, l);
    Factorization f = factor_on_curve(p, l, c);
    CHECK(riccati_check(f.phi_plus, p, c));
    CHECK(riccati_check(f.phi_minus, p, c));
    CHECK_FALSE(riccati_check(f.phi_plus + f.phi_plus.one_like(), p, c));
    CHECK(solution_identities(f, c, p).all());
  }
  Potential p = family_potential(Family::Rational, 1);
  LevelResult l = kdv_level(p);
  CurvePoly c = spectral_curve(p, l);
  CHECK(factor_on_curve(p, l, c).phi_plus == Elem(c.field, parse_ratfun("(x^3*mu - 1)/(x^3*lambda + x)")));
}

TEST_CASE("specialization at points") {
  Potential p = family_potential(Family::Rational, 1);
  LevelResult l = kdv_level(p);
  CurvePoly c = spectral_curve(p, l);
  SpecializedFactor a = specialize_at_point(p, l, c, RatFun(-1), RatFun(-1));
  CHECK(a.factorization_verified);
  CHECK(a.gcd_order_one);
  CHECK(a.phi0 == Elem(p.u.context(), parse_ratfun("(x^2 - x + 1)/(x^2 - x)")));
  SpecializedFactor z = specialize_at_point(p, l, c, RatFun(), RatFun());
  CHECK(z.in_Z);
  CHECK(z.factorization_verified);
  CHECK(code_of([&] { specialize_at_point(p, l, c, RatFun(1), RatFun(1)); }) == ErrorCode::NotOnCurve);
}
