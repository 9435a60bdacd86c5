#include "kdvspec/upoly.hpp"

#include <algorithm>

#include "kdvspec/error.hpp"
#include "kdvspec/mpoly.hpp"

namespace kdvspec {

UPoly::UPoly(Var t, std::vector<RatFun> c) : t_(t), c_(std::move(c)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_mpoly(Var t, const MPoly& p) {
  std::vector<RatFun> c;
  for (auto& m : p.coefficients(t)) c.emplace_back(m);
  return UPoly(t, std::move(c));
}

UPoly UPoly::monomial(Var t, unsigned k, const RatFun& c) {
  std::vector<RatFun> v(k + 1);
  v[k] = c;
  return UPoly(t, std::move(v));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<RatFun> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return UPoly(is_zero() ? o.t_ : t_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(t_, std::vector<RatFun>{});
  std::vector<RatFun> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(t_, std::move(r));
}

UPoly UPoly::scaled(const RatFun& c) const {
  std::vector<RatFun> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
  return UPoly(t_, std::move(r));
}

UPoly UPoly::derivative() const {
  std::vector<RatFun> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].scaled(Rat(static_cast<long>(i))));
  return UPoly(t_, std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

RatFun UPoly::eval(const RatFun& v) const {
  RatFun acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc;
}

RatFun UPoly::to_ratfun() const {
  MPoly den(1);
  for (const auto& a : c_) den = exact_quotient(den * a.den(), gcd(den, a.den()));
  MPoly num;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    MPoly term = c_[i].num() * exact_quotient(den, c_[i].den());
    num += i == 0 ? term : term.shifted(Monomial(t_, static_cast<std::uint32_t>(i)));
  }
  return RatFun(num, den);
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  Var t = b.var();
  UPoly q(t, std::vector<RatFun>{}), r = a;
  const RatFun inv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    unsigned k = static_cast<unsigned>(r.degree() - b.degree());
    UPoly m = UPoly::monomial(t, k, r.lead() * inv);
    q = q + m;
    std::vector<RatFun> next = (r - m * b).coeffs();
    // the leading term cancels exactly; drop it even if trimming missed it
    if (next.size() > static_cast<std::size_t>(r.degree())) next.resize(static_cast<std::size_t>(r.degree()));
    r = UPoly(t, std::move(next));
  }
  return {q, r};
}

UPoly up_exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) raise(ErrorCode::InexactDivision, a.str() + " by " + b.str());
  return q;
}

UPoly up_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::pair<UPoly, UPoly> up_diophantine(const UPoly& a, const UPoly& b, const UPoly& c) {
  // extended Euclid: s0*a + t0*b = g
  Var t = b.var();
  UPoly r0 = a, r1 = b;
  UPoly s0(t, RatFun(1)), s1(t, std::vector<RatFun>{});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) raise(ErrorCode::InvalidArgument, "diophantine equation with non-coprime operands");
  UPoly s = s0.scaled(r0.lead().inverse()) * c;
  s = divmod(s, b).second;
  UPoly rest = c - s * a;
  return {s, up_exact_div(rest, b)};
}

namespace {

using Dense = std::vector<Rat>;  // low degree first

void dtrim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense drem(Dense a, const Dense& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t sh = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
    a.pop_back();
    dtrim(a);
  }
  return a;
}

int sign_at(const Dense& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return sgn(acc);
}

int variations(const std::vector<Dense>& seq, const Rat& x) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Integer roots in (a, b] of the squarefree polynomial with Sturm sequence seq.
void isolate(const std::vector<Dense>& seq, Int a, Int b, std::vector<Int>& out) {
  int n = variations(seq, Rat(a)) - variations(seq, Rat(b));
  if (n == 0) return;
  if (b - a == 1) {
    if (sign_at(seq[0], Rat(b)) == 0) out.push_back(b);
    return;
  }
  Int m = a + (b - a) / 2;
  isolate(seq, a, m, out);
  isolate(seq, m, b, out);
}

}  // namespace

std::vector<Rat> rational_roots(const MPoly& p, Var v) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  for (Var o : p.variables())
    if (o != v) raise(ErrorCode::InvalidArgument, "rational_roots expects a univariate polynomial, got " + p.str());
  std::vector<Rat> roots;
  MPoly g = squarefree_part(p, v).primitive();
  if (g.min_degree(v) > 0) {
    roots.emplace_back(0);
    g = exact_quotient(g, MPoly::var(v, g.min_degree(v)));
  }
  const std::uint32_t n = g.degree(v);
  if (n == 0) return roots;
  std::vector<Int> a(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) a[i] = g.coefficient(v, i).constant_term().get_num();
  // y = a_n z turns g into a monic integer polynomial with the same rational roots scaled
  Dense h(n + 1);
  Int pw = 1;
  for (std::uint32_t i = n + 1; i-- > 0;) {
    h[i] = Rat(a[i] * pw);
    if (i < n) pw *= a[n];
  }
  // h[i] = a_i a_n^{n-1-i}; fix the leading entry to 1
  h[n] = 1;
  Int bound = 1;
  for (const auto& c : h) {
    Int b = abs(c.get_num()) + 1;
    if (b > bound) bound = b;
  }

  std::vector<Dense> seq{h};
  Dense d;
  for (std::size_t i = 1; i < h.size(); ++i) d.push_back(h[i] * Rat(static_cast<long>(i)));
  seq.push_back(d);
  while (seq.back().size() > 1) {
    Dense r = drem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  std::vector<Int> ys;
  isolate(seq, -bound - 1, bound, ys);
  for (const auto& y : ys) roots.emplace_back(Rat(y, a[n]));
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace kdvspec
