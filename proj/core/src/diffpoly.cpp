#include "kdvspec/diffpoly.hpp"

#include <algorithm>

#include "kdvspec/error.hpp"

namespace kdvspec {

int DiffPoly::order() const {
  int m = -1;
  for (const auto& t : p_)
    for (const auto& vp : t.mono) m = std::max(m, sym::u_order(vp.var));
  return m;
}

DiffPoly DiffPoly::derivative() const {
  MPoly acc;
  for (Var v : p_.variables()) {
    int k = sym::u_order(v);
    if (k < 0) continue;
    acc += p_.derivative(v) * MPoly::var(sym::u_derivative(static_cast<unsigned>(k) + 1));
  }
  return DiffPoly(acc);
}

DiffPoly dp_integrate(const DiffPoly& p) {
  MPoly q, r = p.poly();
  while (!r.is_zero()) {
    int m = DiffPoly(r).order();
    if (m <= 0) raise(ErrorCode::NotTotalDerivative, DiffPoly(r).str() + " has no antiderivative in C{u}");
    Var top = sym::u_derivative(static_cast<unsigned>(m));
    if (r.degree(top) > 1)
      raise(ErrorCode::NotTotalDerivative, "nonlinear in " + sym::name(top) + ": " + r.str());
    MPoly a = r.coefficient(top, 1);
    Var below = sym::u_derivative(static_cast<unsigned>(m - 1));
    std::vector<MPoly::Term> terms;
    for (const auto& t : a) {
      std::uint32_t e = t.mono.degree(below);
      terms.push_back({t.mono.with_exp(below, e + 1), t.coef / (e + 1)});
    }
    MPoly b = MPoly::from_terms(std::move(terms));
    q += b;
    r -= DiffPoly(b).derivative().poly();
  }
  return DiffPoly(q);
}

int dp_weight(const DiffPoly& p) {
  int w = -2;
  for (const auto& t : p.poly()) {
    int tw = 0;
    for (const auto& vp : t.mono) {
      int k = sym::u_order(vp.var);
      if (k >= 0) tw += (k + 2) * static_cast<int>(vp.exp);
    }
    if (w == -2) w = tw;
    else if (w != tw) return -1;
  }
  return w == -2 ? 0 : w;
}

Elem dp_substitute(const DiffPoly& p, const Elem& pot, const std::map<Var, RatFun>& constants) {
  std::map<Var, RatFun> values = constants;
  int m = p.order();
  Elem jet = pot;
  for (int k = 0; k <= m; ++k) {
    values[sym::u_derivative(static_cast<unsigned>(k))] = jet.value();
    if (k < m) jet = jet.derivative();
  }
  return Elem(pot.context(), substitute_all(p.poly(), values));
}

DiffPoly coeff_determinant(const Matrix<DiffPoly>& m, DetMode mode) {
  if (mode == DetMode::Bareiss) return DiffPoly(det_bareiss(m.map([](const DiffPoly& d) { return d.poly(); })));
  RatFun r = det_cofactor(m.map([](const DiffPoly& d) { return RatFun(d.poly()); }));
  return DiffPoly(r.num());
}

Elem coeff_determinant(const Matrix<Elem>& m, DetMode mode) {
  FieldContext::Ptr ctx;
  for (std::size_t i = 0; i < m.rows() && !ctx; ++i)
    for (std::size_t j = 0; j < m.cols() && !ctx; ++j) ctx = m(i, j).context();
  if (!ctx) return Elem();
  return Elem(ctx, determinant(m.map([](const Elem& e) { return e.value(); }), mode));
}

}  // namespace kdvspec
