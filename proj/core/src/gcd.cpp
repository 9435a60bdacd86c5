#include <algorithm>
#include <cstdint>

#include "kdvspec/error.hpp"
#include "kdvspec/mpoly.hpp"

namespace kdvspec {
namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return (a * b) % kPrime; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

// Deterministic evaluation point per variable.
std::uint64_t point_for(Var v) {
  std::uint64_t z = 0x9E3779B97F4A7C15ULL * (v + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return 2 + z % (kPrime - 3);
}

bool rat_mod(const Rat& c, std::uint64_t& out) {
  std::uint64_t n = mpz_fdiv_ui(c.get_num_mpz_t(), kPrime);
  std::uint64_t d = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
  if (d == 0) return false;
  out = mulmod(n, invmod(d));
  return true;
}

using Dense = std::vector<std::uint64_t>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Image of p in Z_p[main] after fixing every other variable.
bool image(const MPoly& p, Var main, Dense& out) {
  out.assign(p.degree(main) + 1, 0);
  for (const auto& t : p) {
    std::uint64_t c;
    if (!rat_mod(t.coef, c)) return false;
    std::uint32_t e = 0;
    for (const auto& vp : t.mono) {
      if (vp.var == main) e = vp.exp;
      else c = mulmod(c, powmod(point_for(vp.var), vp.exp));
    }
    out[e] = (out[e] + c) % kPrime;
  }
  return true;
}

std::size_t dense_gcd_degree(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t q = mulmod(a.back(), inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + kPrime - mulmod(q, b[i])) % kPrime;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Modular image degree of gcd in main, or -1 when the sample point is unlucky
// (a leading coefficient vanishes, or a coefficient denominator is 0 mod p).
long modular_gcd_degree(const MPoly& a, const MPoly& b, Var main) {
  Dense ia, ib;
  if (!image(a, main, ia) || !image(b, main, ib)) return -1;
  if (ia.back() == 0 || ib.back() == 0) return -1;
  return static_cast<long>(dense_gcd_degree(std::move(ia), std::move(ib)));
}

MPoly gcd_of_coefficients(const MPoly& p, Var v, MPoly g) {
  for (const auto& c : p.coefficients(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// a, b nonconstant and free of monomial content.
MPoly gcd_core(const MPoly& a, const MPoly& b) {
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  auto va = a.variables(), vb = b.variables();
  for (Var v : va)
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd_of_coefficients(a, v, b);
  for (Var v : vb)
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd_of_coefficients(b, v, a);

  MPoly pa = a.primitive(), pb = b.primitive();
  if (pa == pb) return pa;

  Var main = va.front();
  std::uint32_t best = UINT32_MAX;
  for (Var v : va) {
    std::uint32_t d = std::max(pa.degree(v), pb.degree(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }
  return gcd_prs(pa, pb, main);
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial mg = Monomial::gcd(ma, mb);
  if (a.is_monomial() || b.is_monomial()) return MPoly::monomial(mg);
  MPoly ra = ma.is_one() ? a : exact_quotient(a, MPoly::monomial(ma));
  MPoly rb = mb.is_one() ? b : exact_quotient(b, MPoly::monomial(mb));
  return gcd_core(ra, rb).shifted(mg).primitive();
}

MPoly gcd_prs(const MPoly& a, const MPoly& b, Var main) {
  MPoly ca = content_in(a, main), cb = content_in(b, main);
  MPoly cg = gcd(ca, cb);
  MPoly A = exact_quotient(a, ca).primitive();
  MPoly B = exact_quotient(b, cb).primitive();
  if (A.degree(main) < B.degree(main)) std::swap(A, B);
  if (B.degree(main) == 0) return cg;

  long image_deg = modular_gcd_degree(A, B, main);
  if (image_deg == 0) return cg;
  if (image_deg == static_cast<long>(B.degree(main))) {
    if (auto q = divide_exact(A, B)) return (cg * B).primitive();
  }

  // Subresultant PRS
  MPoly g(1), h(1);
  while (true) {
    std::uint32_t delta = A.degree(main) - B.degree(main);
    MPoly R = pseudo_remainder(A, B, main);
    if (R.is_zero()) break;
    if (R.degree(main) == 0) {
      B = MPoly(1);
      break;
    }
    A = B;
    B = exact_quotient(R, g * h.pow(delta));
    g = A.coefficients(main).back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_quotient(g.pow(delta), h.pow(delta - 1));
    }
  }
  if (B.degree(main) == 0) return cg;
  MPoly pb = exact_quotient(B, content_in(B, main));
  return (cg * pb).primitive();
}

}  // namespace kdvspec
