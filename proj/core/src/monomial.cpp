#include "kdvspec/monomial.hpp"

#include <algorithm>
#include <boost/container_hash/hash.hpp>

namespace kdvspec {

Monomial::Monomial(Var v, std::uint32_t e) {
  if (e > 0) {
    powers_.push_back({v, e});
    degree_ = e;
  }
}

Monomial::Monomial(std::initializer_list<VarPow> powers) {
  for (const auto& p : powers) *this = *this * Monomial(p.var, p.exp);
}

std::uint32_t Monomial::degree(Var v) const {
  for (const auto& p : powers_) {
    if (p.var == v) return p.exp;
    if (p.var > v) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.is_one()) return *this;
  if (is_one()) return other;
  Monomial r;
  r.powers_.reserve(powers_.size() + other.powers_.size());
  auto a = powers_.begin(), ae = powers_.end();
  auto b = other.powers_.begin(), be = other.powers_.end();
  while (a != ae && b != be) {
    if (a->var == b->var) {
      r.powers_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    } else if (a->var < b->var) {
      r.powers_.push_back(*a++);
    } else {
      r.powers_.push_back(*b++);
    }
  }
  r.powers_.insert(r.powers_.end(), a, ae);
  r.powers_.insert(r.powers_.end(), b, be);
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
  if (other.degree_ > degree_) return false;
  auto a = powers_.begin(), ae = powers_.end();
  for (const auto& p : other.powers_) {
    while (a != ae && a->var < p.var) ++a;
    if (a == ae || a->var != p.var || a->exp < p.exp) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  auto b = other.powers_.begin(), be = other.powers_.end();
  for (const auto& p : powers_) {
    std::uint32_t e = p.exp;
    if (b != be && b->var == p.var) {
      e -= b->exp;
      ++b;
    }
    if (e > 0) r.powers_.push_back({p.var, e});
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::with_exp(Var v, std::uint32_t e) const {
  Monomial r;
  bool placed = false;
  for (const auto& p : powers_) {
    if (!placed && p.var >= v) {
      placed = true;
      if (e > 0) r.powers_.push_back({v, e});
      if (p.var == v) continue;
    }
    r.powers_.push_back(p);
  }
  if (!placed && e > 0) r.powers_.push_back({v, e});
  r.degree_ = 0;
  for (const auto& p : r.powers_) r.degree_ += p.exp;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.powers_.begin(), ie = a.powers_.end();
  auto j = b.powers_.begin(), je = b.powers_.end();
  while (i != ie && j != je) {
    if (i->var == j->var) {
      std::uint32_t e = std::min(i->exp, j->exp);
      r.powers_.push_back({i->var, e});
      r.degree_ += e;
      ++i;
      ++j;
    } else if (i->var < j->var) {
      ++i;
    } else {
      ++j;
    }
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) { return (a * b) / gcd(a, b); }

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  auto a = powers_.begin(), ae = powers_.end();
  auto b = other.powers_.begin(), be = other.powers_.end();
  while (a != ae && b != be) {
    if (a->var != b->var) {
      // The side holding the earlier variable has the larger exponent there.
      return a->var < b->var ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (a->exp != b->exp) return a->exp <=> b->exp;
    ++a;
    ++b;
  }
  if (a != ae) return std::strong_ordering::greater;
  if (b != be) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0;
  for (const auto& p : powers_) {
    boost::hash_combine(h, p.var);
    boost::hash_combine(h, p.exp);
  }
  return h;
}

}  // namespace kdvspec
