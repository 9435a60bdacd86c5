#include "kdvspec/families.hpp"

#include "kdvspec/error.hpp"

namespace kdvspec {

Potential make_potential(const Elem& u, std::string label) {
  if (u.derivative().is_zero())
    raise(ErrorCode::NonConstantPotential, "potential must be nonconstant, got " + u.str());
  return {u, std::move(label)};
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Rational: return "rational";
    case Family::RosenMorse: return "rosen-morse";
    case Family::Elliptic: return "elliptic";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "rational") return Family::Rational;
  if (name == "rosen-morse" || name == "rosen_morse" || name == "rm") return Family::RosenMorse;
  if (name == "elliptic") return Family::Elliptic;
  return std::nullopt;
}

FieldContext::Ptr eta_tower() {
  static const FieldContext::Ptr ctx = FieldContext::exponential(sym::eta(), Rat(1));
  return ctx;
}

FieldContext::Ptr w_tower() {
  static const FieldContext::Ptr ctx = FieldContext::exponential(sym::w(), Rat(2));
  return ctx;
}

Potential family_potential(Family f, unsigned s) {
  if (s == 0) raise(ErrorCode::InvalidArgument, "family index s must be >= 1");
  const long k = static_cast<long>(s) * (static_cast<long>(s) + 1);
  const std::string tag = std::string(family_name(f)) + " s=" + std::to_string(s);
  switch (f) {
    case Family::Rational:
      return make_potential(Elem(FieldContext::rational(), RatFun(MPoly(k), MPoly::var(sym::x(), 2))), tag);
    case Family::RosenMorse: {
      // 1/cosh^2 = 4 eta^2 / (eta^2 + 1)^2
      MPoly e2 = MPoly::var(sym::eta(), 2);
      return make_potential(Elem(eta_tower(), RatFun(e2.scaled(Rat(-4 * k)), (e2 + MPoly(1)).pow(2))), tag);
    }
    case Family::Elliptic:
      return make_potential(Elem(FieldContext::weierstrass(), RatFun(MPoly::var(sym::wp()).scaled(Rat(k)))), tag);
  }
  raise(ErrorCode::InvalidArgument, "unknown family");
}

Potential elliptic_potential(unsigned s, const Rat& g2, const Rat& g3) {
  const long k = static_cast<long>(s) * (static_cast<long>(s) + 1);
  return make_potential(Elem(FieldContext::weierstrass(g2, g3), RatFun(MPoly::var(sym::wp()).scaled(Rat(k)))),
                        "elliptic s=" + std::to_string(s) + " g2=" + to_string(g2) + " g3=" + to_string(g3));
}

}  // namespace kdvspec
