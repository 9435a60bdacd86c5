#pragma once

#include <string>
#include <vector>

#include "kdvspec/families.hpp"

namespace kdvspec {

/// Expected results for one family member, written in the expression
/// grammar. "printed" fields are the reference tables transcribed as is;
/// a non-empty "corrected" field replaces a printed value that fails its own
/// defining identity (the note says which one).
struct GoldenRow {
  Family family;
  unsigned s;
  std::vector<std::string> cbar;
  std::vector<std::string> cbar_printed;  // empty when equal to cbar
  std::string curve;
  std::string curve_printed;              // empty when equal to curve
  std::string phi_printed;
  std::string phi_corrected;
  std::string chi1, chi2;                 // empty: no parametrization expected
  std::string phit_printed;
  std::string phit_corrected;
  std::string upsilon;                    // rational factor of the solution
  std::string upsilon_rate;               // Upsilon ~ upsilon * e^{rate x}
  std::string upsilon_fixture;            // closed form not computed by the engine
  std::string note;

  const std::string& phi() const { return phi_corrected.empty() ? phi_printed : phi_corrected; }
  const std::string& phit() const { return phit_corrected.empty() ? phit_printed : phit_corrected; }
};

const std::vector<GoldenRow>& golden_rows();
/// Raises InvalidArgument when no row exists.
const GoldenRow& golden_row(Family f, unsigned s);

/// Rational points (lambda0, mu0) on each family curve used by the
/// specialization checks; at least one has mu0 = 0. Elliptic points refer to
/// the numeric invariants returned by specialization_invariants().
struct CurvePoint {
  std::string lambda0, mu0;
};
std::vector<CurvePoint> specialization_points(Family f, unsigned s);
/// (g2, g3) used when the elliptic family is specialized at rational points.
std::pair<Rat, Rat> specialization_invariants();

}  // namespace kdvspec
