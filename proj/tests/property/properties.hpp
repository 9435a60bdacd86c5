#pragma once

#include <vector>

namespace kdvspec::props {

struct SuiteResult {
  int cases = 0;
  int failures = 0;
};

/// Randomized invariant suites. Each is deterministic for a given seed.
SuiteResult leibniz(unsigned seed, int cases);
SuiteResult integrate_derive(unsigned seed, int cases);
SuiteResult op_mul_associative(unsigned seed, int cases);
SuiteResult curve_invert(unsigned seed, int cases);
SuiteResult determinant(unsigned seed, int cases);
SuiteResult solver_soundness(unsigned seed, int cases);

struct Suite {
  const char* name;
  SuiteResult (*run)(unsigned, int);
  unsigned seed;
};

/// The pinned seeds used by the unit and acceptance runs.
inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> s{{"Leibniz rule", leibniz, 1201},
                                    {"dp_integrate after dp_derive", integrate_derive, 1202},
                                    {"op_mul associativity", op_mul_associative, 1203},
                                    {"curve_invert", curve_invert, 1204},
                                    {"Bareiss vs cofactor determinant", determinant, 1205},
                                    {"solver soundness", solver_soundness, 1206}};
  return s;
}

}  // namespace kdvspec::props
