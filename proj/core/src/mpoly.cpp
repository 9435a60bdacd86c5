#include "kdvspec/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "kdvspec/error.hpp"

namespace kdvspec {
namespace {

bool term_greater(const MPoly::Term& a, const MPoly::Term& b) { return a.mono > b.mono; }

std::vector<MPoly::Term> combine_sorted(std::vector<MPoly::Term> terms) {
  std::vector<MPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return out;
}

}  // namespace

// Callers may hand over an uncanonicalized mpq (e.g. Rat(2, 2)).
MPoly::MPoly(const Rat& c) {
  Rat v = c;
  v.canonicalize();
  if (v != 0) terms_.push_back({Monomial(), v});
}

MPoly::MPoly(long c) : MPoly(Rat(c)) {}

MPoly MPoly::var(Var v, std::uint32_t exp) { return monomial(Monomial(v, exp)); }

MPoly MPoly::monomial(const Monomial& m, const Rat& c) {
  MPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  MPoly p;
  p.terms_ = combine_sorted(std::move(terms));
  return p;
}

MPoly MPoly::from_sorted_terms(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Rat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return Rat(0);
}

Rat MPoly::coef_of(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Rat(0);
}

std::vector<Var> MPoly::variables() const {
  std::vector<Var> vs;
  for (const auto& t : terms_)
    for (const auto& p : t.mono) vs.push_back(p.var);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool MPoly::contains(Var v) const {
  for (const auto& t : terms_)
    if (t.mono.degree(v) > 0) return true;
  return false;
}

std::uint32_t MPoly::degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

std::uint32_t MPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree(v));
  return d;
}

std::uint32_t MPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = UINT32_MAX;
  for (const auto& t : terms_) d = std::min(d, t.mono.degree(v));
  return d;
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    auto c = a->mono <=> b->mono;
    if (c == 0) {
      Rat s = a->coef + b->coef;
      if (s != 0) out.push_back({a->mono, std::move(s)});
      ++a;
      ++b;
    } else if (c > 0) {
      out.push_back(*a++);
    } else {
      out.push_back(*b++);
    }
  }
  out.insert(out.end(), a, ae);
  out.insert(out.end(), b, be);
  return from_sorted_terms(std::move(out));
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return MPoly();
  if (o.is_constant()) return scaled(o.lead_coef());
  if (is_constant()) return o.scaled(lead_coef());
  if (o.is_monomial()) return mul_term(o.lead().mono, o.lead_coef());
  if (is_monomial()) return o.mul_term(lead().mono, lead_coef());
  const MPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
  const MPoly& big = terms_.size() <= o.terms_.size() ? o : *this;
  if (small.terms_.size() <= 8) {
    // Each shifted copy of big is already sorted; merging beats hashing here.
    MPoly acc;
    for (const auto& t : small.terms_) acc += big.mul_term(t.mono, t.coef);
    return acc;
  }
  std::unordered_map<Monomial, Rat, MonomialHash> acc;
  acc.reserve(small.terms_.size() * big.terms_.size());
  for (const auto& s : small.terms_)
    for (const auto& t : big.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, 0);
      it->second += s.coef * t.coef;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), term_greater);
  return from_sorted_terms(std::move(out));
}

MPoly MPoly::scaled(const Rat& c0) const {
  Rat c = c0;
  c.canonicalize();
  if (c == 0) return MPoly();
  if (c == 1) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

MPoly MPoly::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  MPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MPoly MPoly::mul_term(const Monomial& m, const Rat& c) const {
  if (c == 0) return MPoly();
  MPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != o.terms_[i].coef || !(terms_[i].mono == o.terms_[i].mono)) return false;
  return true;
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono.degree(v);
    if (e == 0) continue;
    out.push_back({t.mono.with_exp(v, e - 1), t.coef * e});
  }
  return from_terms(std::move(out));
}

std::vector<MPoly> MPoly::coefficients(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono.degree(v);
    buckets[e].push_back({e ? t.mono.without(v) : t.mono, t.coef});
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  // Removing one variable from a grlex-sorted list can break the order.
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::from_coefficients(Var v, const std::vector<MPoly>& coeffs) {
  MPoly r;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) r += coeffs[i].shifted(Monomial(v, static_cast<std::uint32_t>(i)));
  return r;
}

MPoly MPoly::coefficient(Var v, std::uint32_t e) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.degree(v) == e) out.push_back({t.mono.without(v), t.coef});
  return from_terms(std::move(out));
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  if (!contains(v)) return *this;
  auto cs = coefficients(v);
  MPoly r = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) r = r * value + cs[i];
  return r;
}

MPoly MPoly::evaluate(Var v, const Rat& value) const { return substitute(v, MPoly(value)); }

Int MPoly::denominator_lcm() const {
  Int l = 1;
  for (const auto& t : terms_) l = lcm(l, t.coef.get_den());
  return l;
}

Rat MPoly::content() const {
  if (terms_.empty()) return Rat(0);
  Int g = 0, l = 1;
  for (const auto& t : terms_) {
    g = gcd(g, t.coef.get_num());
    l = lcm(l, t.coef.get_den());
  }
  Rat c(g, l);
  c.canonicalize();
  return c;
}

MPoly MPoly::primitive() const {
  if (terms_.empty()) return MPoly();
  Rat c = content();
  if (lead_coef() < 0) c = -c;
  if (c == 1) return *this;
  return scaled(1 / c);
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (t.mono.is_one() || c != 1) {
      os << c.get_str();
      need_star = true;
    }
    for (const auto& p : t.mono) {
      if (need_star) os << '*';
      os << sym::name(p.var);
      if (p.exp > 1) os << '^' << p.exp;
      need_star = true;
    }
  }
  return os.str();
}

std::size_t MPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    boost::hash_combine(h, t.mono.hash());
    boost::hash_combine(h, mpz_get_ui(t.coef.get_num_mpz_t()));
    boost::hash_combine(h, mpz_get_ui(t.coef.get_den_mpz_t()));
  }
  return h;
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) return a.scaled(1 / b.lead_coef());
  if (a.degree() < b.degree()) return std::nullopt;
  const Monomial& bl = b.lead().mono;
  const Rat& bc = b.lead_coef();
  if (b.is_monomial()) {
    std::vector<MPoly::Term> q;
    q.reserve(a.size());
    for (const auto& t : a) {
      if (!t.mono.divisible_by(bl)) return std::nullopt;
      q.push_back({t.mono / bl, t.coef / bc});
    }
    return MPoly::from_sorted_terms(std::move(q));
  }
  // Cheap necessary conditions before the long division.
  for (Var v : b.variables())
    if (a.degree(v) < b.degree(v)) return std::nullopt;

  std::map<Monomial, Rat, std::greater<>> rem;
  for (const auto& t : a) rem.emplace(t.mono, t.coef);
  std::vector<MPoly::Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!it->first.divisible_by(bl)) return std::nullopt;
    Monomial m = it->first / bl;
    Rat c = it->second / bc;
    for (const auto& t : b) {
      Monomial key = t.mono * m;
      auto [pos, inserted] = rem.try_emplace(key, 0);
      pos->second -= t.coef * c;
      if (pos->second == 0) rem.erase(pos);
    }
    q.push_back({std::move(m), std::move(c)});
  }
  return MPoly::from_sorted_terms(std::move(q));
}

MPoly exact_quotient(const MPoly& a, const MPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) raise(ErrorCode::InexactDivision, "(" + a.str() + ") / (" + b.str() + ")");
  return *q;
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, Var v) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "pseudo-remainder by zero");
  auto r = a.coefficients(v);
  auto bc = b.coefficients(v);
  std::size_t db = bc.size() - 1;
  if (a.is_zero() || r.size() - 1 < db) return a;
  const MPoly& lb = bc.back();
  int e = static_cast<int>(r.size() - 1 - db) + 1;
  while (!r.empty() && r.size() - 1 >= db) {
    MPoly lead = r.back();
    std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c = c * lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= lead * bc[j];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    --e;
  }
  MPoly out = MPoly::from_coefficients(v, r);
  return e > 0 ? out * lb.pow(static_cast<unsigned>(e)) : out;
}

MPoly content_in(const MPoly& p, Var v) {
  if (p.is_zero()) return MPoly();
  MPoly g;
  for (const auto& c : p.coefficients(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MPoly squarefree_part(const MPoly& p, Var v) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "squarefree part of 0");
  MPoly g = gcd(p, p.derivative(v));
  return exact_quotient(p, g).primitive();
}

std::vector<MPoly> squarefree_decomposition(const MPoly& p, Var v) {
  if (p.is_zero()) raise(ErrorCode::ZeroPolynomial, "squarefree decomposition of 0");
  std::vector<MPoly> out;
  MPoly a = p.primitive();
  MPoly da = a.derivative(v);
  MPoly g = gcd(a, da);
  MPoly b = exact_quotient(a, g);
  MPoly c = exact_quotient(da, g);
  MPoly d = c - b.derivative(v);
  while (b.degree(v) > 0) {
    MPoly f = gcd(b, d);
    out.push_back(f);
    b = exact_quotient(b, f);
    c = exact_quotient(d, f);
    d = c - b.derivative(v);
  }
  while (!out.empty() && out.back().is_one()) out.pop_back();
  return out;
}

}  // namespace kdvspec
