#pragma once

#include <concepts>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kdvspec/diffpoly.hpp"
#include "kdvspec/error.hpp"
#include "kdvspec/field.hpp"
#include "kdvspec/matrix.hpp"

namespace kdvspec {

/// What an operator coefficient has to provide. A default-constructed value
/// is zero; field-valued coefficients additionally provide inverse().
template <class C>
concept DiffCoefficient = requires(const C& a, const C& b, const Rat& q) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a.scaled(q) } -> std::convertible_to<C>;
  { a.derivative() } -> std::convertible_to<C>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.one_like() } -> std::convertible_to<C>;
  { a.str() } -> std::convertible_to<std::string>;
};

template <class C>
concept FieldCoefficient = DiffCoefficient<C> && requires(const C& a) {
  { a.inverse() } -> std::convertible_to<C>;
};

/// Differential operator sum a_i d^i with d*a = a*d + a'. The zero operator
/// has no coefficients and order -1.
template <DiffCoefficient C>
class DiffOp {
public:
  DiffOp() = default;
  explicit DiffOp(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  static DiffOp constant(const C& a) { return DiffOp(std::vector<C>{a}); }
  /// d^k, with the unit taken from `like` so field coefficients keep their context.
  static DiffOp d(const C& like, unsigned k = 1) {
    std::vector<C> c(k + 1, like.one_like().scaled(0));
    c[k] = like.one_like();
    return DiffOp(std::move(c));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  /// Coefficient of d^i (zero beyond the order).
  C coeff(int i) const { return i >= 0 && i <= order() ? c_[static_cast<std::size_t>(i)] : C(); }
  const C& lead() const {
    if (c_.empty()) raise(ErrorCode::IndexOutOfRange, "leading coefficient of the zero operator");
    return c_.back();
  }

  DiffOp operator-() const {
    DiffOp r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  DiffOp operator+(const DiffOp& o) const {
    std::vector<C> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < c_.size() && i < o.c_.size()) r[i] = c_[i] + o.c_[i];
      else r[i] = i < c_.size() ? c_[i] : o.c_[i];
    }
    return DiffOp(std::move(r));
  }
  DiffOp operator-(const DiffOp& o) const { return *this + (-o); }
  DiffOp operator*(const DiffOp& o) const;
  DiffOp& operator+=(const DiffOp& o) { return *this = *this + o; }
  DiffOp& operator-=(const DiffOp& o) { return *this = *this - o; }
  /// Left multiplication by a coefficient: a * P.
  DiffOp left_scaled(const C& a) const {
    std::vector<C> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = a * c_[i];
    return DiffOp(std::move(r));
  }
  DiffOp scaled(const Rat& q) const {
    std::vector<C> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].scaled(q);
    return DiffOp(std::move(r));
  }
  /// d * P, used to build Sylvester rows.
  DiffOp shifted() const {
    std::vector<C> r(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      r[i + 1] = r[i + 1] + c_[i];
      r[i] = r[i] + c_[i].derivative();
    }
    return DiffOp(std::move(r));
  }
  /// P(f) = sum a_i f^(i).
  C apply(const C& f) const {
    C acc, jet = f;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      acc = acc + c_[i] * jet;
      if (i + 1 < c_.size()) jet = jet.derivative();
    }
    return acc;
  }

  bool operator==(const DiffOp& o) const { return c_ == o.c_; }
  bool operator!=(const DiffOp& o) const { return !(c_ == o.c_); }

  /// Highest order first: "(a_n)*D^n + ... + (a_0)".
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = order(); i >= 0; --i) {
      const C& a = c_[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << '(' << a.str() << ')';
      if (i >= 1) os << "*D";
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<C> c_;
};

template <DiffCoefficient C>
DiffOp<C> DiffOp<C>::operator*(const DiffOp& o) const {
  if (is_zero() || o.is_zero()) return DiffOp();
  const std::size_t n = c_.size(), m = o.c_.size();
  // jets[j][k] = k-th derivative of o's coefficient j
  std::vector<std::vector<C>> jets(m);
  for (std::size_t j = 0; j < m; ++j) {
    jets[j].push_back(o.c_[j]);
    for (std::size_t k = 1; k < n; ++k) {
      if (jets[j].back().is_zero()) break;
      jets[j].push_back(jets[j].back().derivative());
    }
  }
  std::vector<C> r(n + m - 1);
  std::vector<bool> touched(r.size(), false);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    long b = 1;  // C(i, k)
    for (std::size_t k = 0; k <= i; ++k) {
      for (std::size_t j = 0; j < m; ++j) {
        if (k >= jets[j].size() || jets[j][k].is_zero()) continue;
        C t = c_[i] * jets[j][k];
        if (b != 1) t = t.scaled(Rat(b));
        std::size_t idx = i + j - k;
        r[idx] = touched[idx] ? r[idx] + t : t;
        touched[idx] = true;
      }
      b = b * static_cast<long>(i - k) / static_cast<long>(k + 1);
    }
  }
  return DiffOp(std::move(r));
}

template <DiffCoefficient C>
DiffOp<C> op_mul(const DiffOp<C>& p, const DiffOp<C>& q) {
  return p * q;
}

template <DiffCoefficient C>
DiffOp<C> op_commutator(const DiffOp<C>& p, const DiffOp<C>& q) {
  return p * q - q * p;
}

/// p = quotient * q + remainder with ord remainder < ord q.
template <FieldCoefficient C>
std::pair<DiffOp<C>, DiffOp<C>> op_right_divide(const DiffOp<C>& p, const DiffOp<C>& q) {
  if (q.is_zero()) raise(ErrorCode::DivisionByZeroOperator, "right division by the zero operator");
  DiffOp<C> quo, rem = p;
  const C inv = q.lead().inverse();
  while (!rem.is_zero() && rem.order() >= q.order()) {
    unsigned k = static_cast<unsigned>(rem.order() - q.order());
    C t = rem.lead() * inv;
    DiffOp<C> mono = DiffOp<C>::d(t, k).left_scaled(t);
    DiffOp<C> step = mono * q;
    quo += mono;
    rem -= step;
    // Guard against a leading coefficient that cancels only up to form.
    if (!rem.is_zero() && rem.order() >= static_cast<int>(k) + q.order())
      raise(ErrorCode::InexactDivision, "leading coefficient did not cancel");
  }
  return {quo, rem};
}

/// Monic greatest common right divisor by the Euclidean algorithm.
template <FieldCoefficient C>
DiffOp<C> op_right_gcd(DiffOp<C> a, DiffOp<C> b) {
  while (!b.is_zero()) {
    auto [q, r] = op_right_divide(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.left_scaled(a.lead().inverse());
}

/// Coefficient matrix of {d^{m-1-k}P, ..., P, d^{n-1-k}Q, ..., Q} with
/// n = ord P, m = ord Q; columns are d^{n+m-1-k} down to d^0.
template <DiffCoefficient C>
Matrix<C> sylvester_matrix(const DiffOp<C>& p, const DiffOp<C>& q, int k) {
  const int n = p.order(), m = q.order();
  if (n < 0 || m < 0) raise(ErrorCode::IndexOutOfRange, "Sylvester matrix of a zero operator");
  if (k < 0 || (k >= 1 && k > std::min(n, m) - 1))
    raise(ErrorCode::IndexOutOfRange, "subresultant index " + std::to_string(k));
  const int rows = n + m - 2 * k, cols = n + m - k;
  Matrix<C> s(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  auto fill = [&](const DiffOp<C>& op, int copies, int row0) {
    std::vector<DiffOp<C>> shifts{op};
    for (int t = 1; t < copies; ++t) shifts.push_back(shifts.back().shifted());
    for (int t = 0; t < copies; ++t) {
      const DiffOp<C>& r = shifts[static_cast<std::size_t>(copies - 1 - t)];
      for (int e = 0; e <= r.order(); ++e) s(static_cast<std::size_t>(row0 + t), static_cast<std::size_t>(cols - 1 - e)) = r.coeff(e);
    }
  };
  fill(p, m - k, 0);
  fill(q, n - k, m - k);
  return s;
}

/// det S_0(P, Q).
template <DiffCoefficient C>
C diff_resultant(const DiffOp<C>& p, const DiffOp<C>& q, DetMode mode = DetMode::Bareiss) {
  if (p.is_zero() || q.is_zero()) raise(ErrorCode::ZeroPolynomial, "differential resultant of a zero operator");
  return coeff_determinant(sylvester_matrix(p, q, 0), mode);
}

/// (det S_1^0, det S_1^1): the subresultant L1 = det S_1^0 + det S_1^1 * d.
template <DiffCoefficient C>
std::pair<C, C> subresultant_L1(const DiffOp<C>& p, const DiffOp<C>& q, DetMode mode = DetMode::Bareiss) {
  if (std::min(p.order(), q.order()) < 2) raise(ErrorCode::OrderTooLow, "subresultant L1 needs orders >= 2");
  Matrix<C> s1 = sylvester_matrix(p, q, 1);
  const std::size_t cols = s1.cols();
  C s10 = coeff_determinant(s1.without_column(cols - 2), mode);
  C s11 = coeff_determinant(s1.without_column(cols - 1), mode);
  return {s10, s11};
}

using FormalOp = DiffOp<DiffPoly>;
using FieldOp = DiffOp<Elem>;

/// L = -d^2 + u with coefficients in the given ring.
inline FormalOp schrodinger_formal() { return FormalOp({DiffPoly::u(0), DiffPoly(0), DiffPoly(-1)}); }
inline FieldOp schrodinger(const Elem& u) { return FieldOp({u, u.zero_like(), -u.one_like()}); }

}  // namespace kdvspec
