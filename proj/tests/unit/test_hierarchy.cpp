#include "doctest.h"

#include "kdvspec/hierarchy.hpp"
#include "kdvspec/text.hpp"

using namespace kdvspec;

namespace {
DiffPoly D(const char* s) { return DiffPoly(parse_poly(s)); }
FormalOp op(std::initializer_list<const char*> lowest_first) {
  std::vector<DiffPoly> c;
  for (const char* s : lowest_first) c.push_back(D(s));
  return FormalOp(c);
}
}  // namespace

TEST_CASE("dp_derive") {
  CHECK(D("u^2").derivative() == D("2*u*du"));
  CHECK(D("u*d2u").derivative() == D("du*d2u + u*d3u"));
  DiffPoly v2 = D("3/8*u^2 - 1/8*d2u");
  CHECK(v2.derivative() == D("3/4*u*du - 1/8*d3u"));
}

TEST_CASE("dp_integrate") {
  CHECK(dp_integrate(D("du")) == D("u"));
  CHECK(dp_integrate(D("2*u*du")) == D("u^2"));
  CHECK(dp_integrate(D("-1/4*d3u + 3/2*u*du")) == D("-1/4*d2u + 3/4*u^2"));
  CHECK_THROWS_AS(dp_integrate(D("u")), Error);
  CHECK_THROWS_AS(dp_integrate(D("du^2")), Error);
  CHECK_THROWS_AS(dp_integrate(D("lambda")), Error);
  CHECK(dp_integrate(D("lambda*du + c1*u*du")) == D("lambda*u + 1/2*c1*u^2"));
}

TEST_CASE("hierarchy values") {
  Hierarchy h;
  CHECK(h.kdv(0) == D("du"));
  CHECK(h.kdv(1) == D("-1/4*d3u + 3/2*u*du"));
  CHECK(h.kdv(2) == D("1/16*d5u - 5/8*u*d3u - 5/4*du*d2u + 15/8*u^2*du"));
  CHECK(h.v(0) == D("1"));
  CHECK(h.v(1) == D("1/2*u"));
  CHECK(h.v(2) == D("3/8*u^2 - 1/8*d2u"));
  CHECK(h.kdv(3) == D("35/16*u^3*du - 35/32*u^2*d3u - 35/8*u*du*d2u + 7/32*u*d5u - 35/32*du^3 + 21/32*du*d4u + 35/32*d2u*d3u - 1/64*d7u"));
  CHECK(h.v(3) == D("5/16*u^3 - 5/16*u*d2u - 5/32*du^2 + 1/32*d4u"));
  CHECK(h.p_odd(1) == op({"3/4*du", "3/2*u", "0", "-1"}));
  CHECK(h.p_odd(2) == op({"-15/16*d3u + 15/8*u*du", "15/8*u^2 - 25/8*d2u", "-15/4*du", "-5/2*u", "0", "1"}));
  CHECK(h.p_hat(2) == h.p_odd(2) + h.p_odd(1).left_scaled(D("c1")) + h.p_odd(0).left_scaled(D("c2")));
  for (unsigned n = 0; n <= 4; ++n) {
    CHECK(dp_weight(h.kdv(n)) == static_cast<int>(2 * n + 3));
    CHECK(h.v(n + 1).derivative().scaled(2) == h.kdv(n));
  }
}

TEST_CASE("Lax identities") {
  Hierarchy h;
  for (unsigned n = 0; n <= 4; ++n) CHECK(h.lax_check(n));
  for (unsigned n = 0; n <= 3; ++n) CHECK(h.lax_check_ext(n));
}

TEST_CASE("formal resultant and subresultant") {
  Hierarchy h;
  FormalOp L = schrodinger_formal();
  FormalOp Ll = L - FormalOp::constant(D("lambda"));
  FormalOp Pm = h.p_hat(1) - FormalOp::constant(D("mu"));
  Matrix<DiffPoly> s0 = sylvester_matrix(Ll, Pm, 0);
  CHECK(s0.rows() == 5);
  CHECK(s0.cols() == 5);
  CHECK(s0(0, 0) == D("-1"));
  Matrix<DiffPoly> s1 = sylvester_matrix(Ll, Pm, 1);
  CHECK(s1.rows() == 3);
  CHECK(s1.cols() == 4);
  // The printed p1 carries +1/4 u''; only -1/4 u'' satisfies d(p1) = KdV_1.
  DiffPoly printed_p1 = D("1/4*d2u + 3/4*u^2 + c1*u - c1^2");
  CHECK(printed_p1.derivative() != h.kdv_ext(1));
  DiffPoly p1 = D("-1/4*d2u + 3/4*u^2 + c1*u - c1^2");
  DiffPoly p0 = D("1/16*du^2 + 1/4*u^3 - 1/8*d2u*u - 1/4*d2u*c1 + u^2*c1 + u*c1^2");
  DiffPoly res = diff_resultant(Ll, Pm);
  CHECK(res == D("-mu^2 - lambda^3 - 2*c1*lambda^2") + p1 * D("lambda") + p0);
  CHECK(diff_resultant(Ll, Pm, DetMode::Cofactor) == res);
  CHECK(p1.derivative() == h.kdv_ext(1));
  CHECK(p0.derivative() == D("1/2*u + c1") * h.kdv_ext(1));
  auto [a, b] = subresultant_L1(Ll, Pm);
  CHECK(a == D("-mu - 1/4*du"));
  CHECK(b == D("1/2*u + c1 + lambda"));
}
