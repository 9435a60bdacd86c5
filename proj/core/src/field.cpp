#include "kdvspec/field.hpp"

#include <algorithm>

#include "kdvspec/error.hpp"

namespace kdvspec {

FieldContext::FieldContext(std::string name, TowerKind kind, std::vector<Var> generators,
                           std::map<Var, RatFun> derivation, std::vector<Relation> relations)
    : name_(std::move(name)),
      kind_(kind),
      generators_(std::move(generators)),
      derivation_(std::move(derivation)),
      relations_(std::move(relations)) {
  for (const auto& [v, d] : derivation_)
    if (!d.is_polynomial()) polynomial_derivation_ = false;
  for (const auto& r : relations_)
    for (const auto& s : relations_)
      if (r.square.contains(s.y)) raise(ErrorCode::InvalidArgument, "relation squares must be free of relation variables");
}

FieldContext::Ptr FieldContext::rational() {
  static const Ptr ctx = std::make_shared<FieldContext>(
      "Q(x)", TowerKind::Rational, std::vector<Var>{sym::x()}, std::map<Var, RatFun>{{sym::x(), RatFun(1)}},
      std::vector<Relation>{});
  return ctx;
}

FieldContext::Ptr FieldContext::exponential(Var t, const Rat& rate) {
  std::string n = "Q(" + sym::name(t) + "), d" + sym::name(t) + " = " + (rate == 1 ? "" : to_string(rate) + "*") + sym::name(t);
  return std::make_shared<FieldContext>(n, TowerKind::Exponential, std::vector<Var>{t},
                                        std::map<Var, RatFun>{{t, RatFun(MPoly::var(t).scaled(rate))}},
                                        std::vector<Relation>{});
}

namespace {
MPoly weierstrass_cubic(Var p, const MPoly& g2, const MPoly& g3) {
  return MPoly::var(p, 3).scaled(4) - g2 * MPoly::var(p) - g3;
}

FieldContext::Ptr make_weierstrass(const MPoly& g2, const MPoly& g3, std::string name) {
  Var p = sym::wp(), dp = sym::dwp();
  std::map<Var, RatFun> d{{p, RatFun::var(dp)}, {dp, RatFun(MPoly::var(p, 2).scaled(6) - g2.scaled(make_rat(1, 2)))}};
  return std::make_shared<FieldContext>(std::move(name), TowerKind::Weierstrass, std::vector<Var>{p, dp}, std::move(d),
                                        std::vector<Relation>{{dp, weierstrass_cubic(p, g2, g3)}});
}
}  // namespace

FieldContext::Ptr FieldContext::weierstrass() {
  static const Ptr ctx = make_weierstrass(MPoly::var(sym::g2()), MPoly::var(sym::g3()), "Q(g2,g3)(wp,dwp)");
  return ctx;
}

FieldContext::Ptr FieldContext::weierstrass(const Rat& g2, const Rat& g3) {
  return make_weierstrass(MPoly(g2), MPoly(g3), "Q(wp,dwp), g2 = " + to_string(g2) + ", g3 = " + to_string(g3));
}

FieldContext::Ptr FieldContext::with_relation(Var y, const MPoly& square, std::string name) const {
  auto rels = relations_;
  MPoly s = reduce(square);
  for (const auto& r : rels)
    if (r.y == y) raise(ErrorCode::InvalidArgument, "relation for " + sym::name(y) + " already present");
  rels.push_back({y, s});
  return std::make_shared<FieldContext>(std::move(name), kind_, generators_, derivation_, std::move(rels));
}

bool FieldContext::is_generator(Var v) const {
  return std::find(generators_.begin(), generators_.end(), v) != generators_.end();
}

const Relation* FieldContext::relation_for(Var y) const {
  for (const auto& r : relations_)
    if (r.y == y) return &r;
  return nullptr;
}

MPoly FieldContext::reduce(const MPoly& p) const {
  MPoly out = p;
  for (const auto& r : relations_) {
    if (out.degree(r.y) < 2) continue;
    auto cs = out.coefficients(r.y);
    MPoly even, odd, spow(1);
    for (std::size_t k = 0; k < cs.size(); k += 2) {
      even += cs[k] * spow;
      if (k + 1 < cs.size()) odd += cs[k + 1] * spow;
      spow *= r.square;
    }
    out = even + odd.shifted(Monomial(r.y));
  }
  return out;
}

RatFun FieldContext::canonical(const RatFun& r) const {
  if (relations_.empty()) return r;
  MPoly n = reduce(r.num()), d = reduce(r.den());
  for (const auto& rel : relations_) {
    if (!d.contains(rel.y)) continue;
    MPoly d0 = d.coefficient(rel.y, 0), d1 = d.coefficient(rel.y, 1);
    MPoly conj = d0 - d1.shifted(Monomial(rel.y));
    n = reduce(n * conj);
    d = reduce(d0 * d0 - d1 * d1 * rel.square);
  }
  if (d.is_zero()) raise(ErrorCode::DivisionByZero, "denominator vanishes modulo the field relations");
  return RatFun(n, d);
}

RatFun FieldContext::conjugate(const RatFun& r, Var y) const {
  return canonical(r.substitute(y, RatFun(MPoly::var(y).scaled(-1))));
}

// Derivative numerator of p; den is multiplied by the lcm of derivation
// denominators that appear (1 in every built-in tower).
MPoly FieldContext::derive_poly_num(const MPoly& p, MPoly& den) const {
  MPoly acc;
  den = MPoly(1);
  if (polynomial_derivation_) {
    for (const auto& [v, dv] : derivation_) {
      if (!p.contains(v)) continue;
      acc += p.derivative(v) * dv.num();
    }
    return acc;
  }
  RatFun racc;
  for (const auto& [v, dv] : derivation_)
    if (p.contains(v)) racc += RatFun(p.derivative(v)) * dv;
  den = racc.den();
  return racc.num();
}

RatFun FieldContext::derive(const RatFun& r) const {
  MPoly dn_den, dd_den;
  MPoly dn = derive_poly_num(r.num(), dn_den);
  if (r.den().is_one()) return canonical(RatFun(dn, dn_den));
  MPoly dd = derive_poly_num(r.den(), dd_den);
  // (n'/a * d - n * d'/b) / d^2
  MPoly num = dn * r.den() * dd_den - r.num() * dd * dn_den;
  MPoly den = r.den() * r.den() * dn_den * dd_den;
  return canonical(RatFun(num, den));
}

bool FieldContext::same_as(const FieldContext& o) const {
  if (this == &o) return true;
  if (generators_ != o.generators_ || derivation_ != o.derivation_ || relations_.size() != o.relations_.size())
    return false;
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].y != o.relations_[i].y || relations_[i].square != o.relations_[i].square) return false;
  return true;
}

Elem::Elem(FieldContext::Ptr ctx, const RatFun& value) : ctx_(std::move(ctx)) {
  if (!ctx_) raise(ErrorCode::InvalidArgument, "element without field context");
  value_ = ctx_->canonical(value);
}

Elem Elem::canonical(FieldContext::Ptr ctx, RatFun value) {
  Elem e;
  e.ctx_ = std::move(ctx);
  e.value_ = std::move(value);
  return e;
}

const FieldContext::Ptr& Elem::common(const Elem& o) const {
  if (ctx_ == o.ctx_ || !o.ctx_) return ctx_;
  if (!ctx_) return o.ctx_;
  if (!ctx_->same_as(*o.ctx_))
    raise(ErrorCode::ModeMismatch, "elements of different fields: " + ctx_->name() + " vs " + o.ctx_->name());
  return ctx_;
}

bool Elem::is_free_of_generators() const {
  if (!ctx_) return true;
  for (Var g : ctx_->generators())
    if (value_.contains(g)) return false;
  return true;
}

// A sum of canonical forms is canonical: the denominator stays free of the
// relation variables and the numerator keeps degree <= 1 in each.
Elem Elem::operator+(const Elem& o) const { return canonical(common(o), value_ + o.value_); }
Elem Elem::operator-(const Elem& o) const { return canonical(common(o), value_ - o.value_); }

Elem Elem::operator*(const Elem& o) const {
  const auto& ctx = common(o);
  RatFun p = value_ * o.value_;
  if (!ctx || ctx->relations().empty() || p.num().is_zero()) return canonical(ctx, std::move(p));
  MPoly n = ctx->reduce(p.num());
  if (n == p.num()) return canonical(ctx, std::move(p));
  return canonical(ctx, RatFun(n, p.den()));
}

Elem Elem::inverse() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero" + (ctx_ ? " in " + ctx_->name() : ""));
  if (!ctx_) return canonical(ctx_, value_.inverse());
  return Elem(ctx_, value_.inverse());
}

Elem Elem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Elem r = one_like(), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Elem Elem::derivative() const {
  if (!ctx_ || value_.is_constant()) return zero_like();
  return canonical(ctx_, ctx_->derive(value_));
}

Elem Elem::substitute(Var v, const RatFun& r) const { return Elem(ctx_, value_.substitute(v, r)); }

std::vector<Coordinate> fe_coordinates(const Elem& e, const MPoly& hint_den) {
  const auto& ctx = e.context();
  RatFun scaled = e.value() * RatFun(hint_den);
  const auto& gens = ctx->generators();
  auto is_gen = [&](Var v) { return std::find(gens.begin(), gens.end(), v) != gens.end(); };
  for (Var v : scaled.den().variables())
    if (is_gen(v))
      raise(ErrorCode::BasisMismatch, "element " + e.str() + " is not expressible over denominator " + hint_den.str());
  std::map<Monomial, std::vector<MPoly::Term>> groups;
  for (const auto& t : scaled.num()) {
    Monomial g, rest;
    for (const auto& vp : t.mono) {
      Monomial& side = is_gen(vp.var) ? g : rest;
      side = side * Monomial(vp.var, vp.exp);
    }
    groups[g].push_back({rest, t.coef});
  }
  std::vector<Coordinate> out;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it)
    out.push_back({it->first, RatFun(MPoly::from_terms(std::move(it->second)), scaled.den())});
  return out;
}

MPoly common_denominator(const std::vector<Elem>& es) {
  MPoly l(1);
  for (const auto& e : es) {
    const MPoly& d = e.value().den();
    if (!d.is_one()) l = exact_quotient(l * d, gcd(l, d));
  }
  return l;
}

}  // namespace kdvspec
