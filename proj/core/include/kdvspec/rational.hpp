#pragma once

#include <gmpxx.h>

#include <string>

namespace kdvspec {

/// Arbitrary-precision integers and rationals. mpq_class keeps numerator and
/// denominator coprime with a positive denominator after canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace kdvspec
