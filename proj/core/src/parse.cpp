#include "kdvspec/parse.hpp"

#include <algorithm>

#include "kdvspec/error.hpp"
#include "kdvspec/families.hpp"
#include "kdvspec/text.hpp"

namespace kdvspec {

FieldContext::Ptr tower_by_name(std::string_view name) {
  if (name == "rational" || name == "x") return FieldContext::rational();
  if (name == "exponential" || name == "eta" || name == "exp") return eta_tower();
  if (name == "w") return w_tower();
  if (name == "weierstrass" || name == "wp") return FieldContext::weierstrass();
  raise(ErrorCode::InvalidArgument, "unknown tower '" + std::string(name) + "'");
}

namespace {

// k when arg == k*x for an integer k.
std::optional<long> multiple_of_x(const RatFun& arg) {
  if (!arg.is_polynomial() || arg.num().degree(sym::x()) != 1 || arg.num().size() != 1) return std::nullopt;
  const auto& t = arg.num().lead();
  if (t.mono.degree() != 1 || !is_integer(t.coef)) return std::nullopt;
  return t.coef.get_num().get_si();
}

RatFun power(Var v, long k) {
  RatFun p = RatFun::var(v);
  return p.pow(static_cast<int>(k));
}

ParseHooks hooks_for(const FieldContext::Ptr& ctx) {
  ParseHooks h;
  const TowerKind kind = ctx->kind();
  const auto gens = ctx->generators();
  h.function = [kind, gens](std::string_view f, const RatFun& arg) -> std::optional<RatFun> {
    if (kind == TowerKind::Weierstrass) {
      bool at_x = arg == RatFun::var(sym::x()), at_tau = arg == RatFun::var(sym::tau());
      if (f == "wp" && at_x) return RatFun::var(sym::wp());
      if (f == "dwp" && at_x) return RatFun::var(sym::dwp());
      if (f == "wp" && at_tau) return RatFun::var(sym::wpt());
      if (f == "dwp" && at_tau) return RatFun::var(sym::dwpt());
      return std::nullopt;
    }
    if (kind != TowerKind::Exponential) return std::nullopt;
    auto k = multiple_of_x(arg);
    if (!k) return std::nullopt;
    if (gens == std::vector<Var>{sym::eta()}) {
      RatFun e = power(sym::eta(), *k), ei = power(sym::eta(), -*k);
      if (f == "exp") return e;
      if (f == "cosh") return (e + ei).scaled(make_rat(1, 2));
      if (f == "sinh") return (e - ei).scaled(make_rat(1, 2));
    } else if (gens == std::vector<Var>{sym::w()}) {
      if (f == "exp" && *k % 2 == 0) return power(sym::w(), *k / 2);
    }
    return std::nullopt;
  };
  return h;
}

Elem finish(const RatFun& v, const FieldContext::Ptr& ctx, std::string_view text) {
  if (!ctx->is_generator(sym::x()) && v.contains(sym::x()))
    raise(ErrorCode::BasisMismatch, "x appears outside cosh/sinh/exp in '" + std::string(text) + "'");
  return Elem(ctx, v);
}

}  // namespace

Elem parse_element(std::string_view text, const FieldContext::Ptr& ctx) {
  return finish(parse_ratfun(text, hooks_for(ctx)), ctx, text);
}

Elem parse_potential(std::string_view text, const FieldContext::Ptr& ctx) {
  ParseHooks h = hooks_for(ctx);
  const auto gens = ctx->generators();
  h.symbol = [gens](std::string_view name) -> std::optional<RatFun> {
    Var v;
    if (!sym::lookup(name, v)) return std::nullopt;
    bool ok = std::find(gens.begin(), gens.end(), v) != gens.end() || v == sym::x() || v == sym::g2() || v == sym::g3();
    if (!ok) return std::nullopt;
    return RatFun::var(v);
  };
  return finish(parse_ratfun(text, h), ctx, text);
}

}  // namespace kdvspec
