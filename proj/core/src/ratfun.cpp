#include "kdvspec/ratfun.hpp"

#include <algorithm>

#include "kdvspec/error.hpp"

namespace kdvspec {

RatFun::RatFun(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) raise(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (den.is_constant()) {
    num_ = num.scaled(1 / den.lead_coef());
    den_ = MPoly(1);
    return;
  }
  MPoly g = gcd(num, den);
  MPoly n = g.is_one() ? num : exact_quotient(num, g);
  MPoly d = g.is_one() ? den : exact_quotient(den, g);
  Rat c = d.content();
  if (d.lead_coef() < 0) c = -c;
  num_ = n.scaled(1 / c);
  den_ = d.scaled(1 / c);
}

RatFun RatFun::from_canonical(MPoly num, MPoly den) {
  RatFun r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

std::vector<Var> RatFun::variables() const {
  auto a = num_.variables(), b = den_.variables();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) return from_canonical(num_ + o.num_, den_);
  if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
  if (o.den_.is_one()) return from_canonical(num_ + o.num_ * den_, den_);
  if (den_.is_one()) return from_canonical(num_ * o.den_ + o.num_, o.den_);
  MPoly g = gcd(den_, o.den_);
  MPoly a = exact_quotient(den_, g), b = exact_quotient(o.den_, g);
  MPoly n = num_ * b + o.num_ * a;
  if (n.is_zero()) return RatFun();
  // Any common factor of n with den*b lies in g.
  MPoly h = gcd(n, g);
  if (!h.is_one()) {
    n = exact_quotient(n, h);
    g = exact_quotient(g, h);
  }
  MPoly d = a * b * g;
  Rat c = d.content();
  if (d.lead_coef() < 0) c = -c;
  return from_canonical(n.scaled(1 / c), d.scaled(1 / c));
}

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return RatFun();
  if (den_.is_one() && o.den_.is_one()) return from_canonical(num_ * o.num_, den_);
  MPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  MPoly n1 = g1.is_one() ? num_ : exact_quotient(num_, g1);
  MPoly d2 = g1.is_one() ? o.den_ : exact_quotient(o.den_, g1);
  MPoly n2 = g2.is_one() ? o.num_ : exact_quotient(o.num_, g2);
  MPoly d1 = g2.is_one() ? den_ : exact_quotient(den_, g2);
  MPoly d = d1 * d2;
  Rat c = d.content();
  if (d.lead_coef() < 0) c = -c;
  return from_canonical((n1 * n2).scaled(1 / c), d.scaled(1 / c));
}

RatFun RatFun::inverse() const {
  if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero rational function");
  Rat c = num_.content();
  if (num_.lead_coef() < 0) c = -c;
  return from_canonical(den_.scaled(1 / c), num_.scaled(1 / c));
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  // Powers of coprime polynomials stay coprime.
  return from_canonical(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFun RatFun::scaled(const Rat& c) const {
  if (c == 0) return RatFun();
  return from_canonical(num_.scaled(c), den_);
}

RatFun RatFun::derivative(Var v) const {
  if (den_.is_one()) return RatFun(num_.derivative(v));
  return RatFun(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFun RatFun::substitute(Var v, const RatFun& value) const {
  std::map<Var, RatFun> m{{v, value}};
  return substitute_all(*this, m);
}

std::string RatFun::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.is_monomial() && num_.lead_coef() > 0 ? num_.str() : "(" + num_.str() + ")";
  std::string d = den_.is_monomial() && den_.lead_coef() == 1 ? den_.str() : "(" + den_.str() + ")";
  return n + "/" + d;
}

RatFun ratfun_normalize(const MPoly& num, const MPoly& den) { return RatFun(num, den); }

namespace {

struct PowerCache {
  MPoly base;
  std::vector<MPoly> pows{MPoly(1)};
  const MPoly& get(std::uint32_t e) {
    while (pows.size() <= e) pows.push_back(pows.back() * base);
    return pows[e];
  }
};

// Numerator and denominator of the image of p, without normalization.
std::pair<MPoly, MPoly> substitute_parts(const MPoly& p, const std::map<Var, RatFun>& values) {
  std::map<Var, std::uint32_t> maxexp;
  for (const auto& t : p)
    for (const auto& vp : t.mono)
      if (values.count(vp.var)) maxexp[vp.var] = std::max(maxexp[vp.var], vp.exp);
  if (maxexp.empty()) return {p, MPoly(1)};

  std::map<Var, PowerCache> nums, dens;
  MPoly common(1);
  for (auto [v, e] : maxexp) {
    const RatFun& r = values.at(v);
    nums[v].base = r.num();
    dens[v].base = r.den();
    common *= dens[v].get(e);
  }
  std::vector<MPoly> pieces;
  for (const auto& t : p) {
    Monomial rest;
    MPoly term(t.coef);
    for (const auto& vp : t.mono) {
      auto it = maxexp.find(vp.var);
      if (it == maxexp.end()) {
        rest = rest * Monomial(vp.var, vp.exp);
      } else {
        term *= nums[vp.var].get(vp.exp);
        if (it->second > vp.exp) term *= dens[vp.var].get(it->second - vp.exp);
      }
    }
    for (auto [v, e] : maxexp)
      if (t.mono.degree(v) == 0) term *= dens[v].get(e);
    pieces.push_back(term.shifted(rest));
  }
  // Pairwise summation keeps operands balanced.
  while (pieces.size() > 1) {
    std::vector<MPoly> next;
    for (std::size_t i = 0; i + 1 < pieces.size(); i += 2) next.push_back(pieces[i] + pieces[i + 1]);
    if (pieces.size() % 2) next.push_back(pieces.back());
    pieces.swap(next);
  }
  return {pieces.empty() ? MPoly() : pieces.front(), common};
}

}  // namespace

RatFun substitute_all(const MPoly& p, const std::map<Var, RatFun>& values) {
  auto [n, d] = substitute_parts(p, values);
  return RatFun(n, d);
}

RatFun substitute_all(const RatFun& r, const std::map<Var, RatFun>& values) {
  auto [nn, nd] = substitute_parts(r.num(), values);
  auto [dn, dd] = substitute_parts(r.den(), values);
  if (dn.is_zero()) raise(ErrorCode::DivisionByZero, "substitution makes the denominator vanish");
  return RatFun(nn * dd, nd * dn);
}

}  // namespace kdvspec
