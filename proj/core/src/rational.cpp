#include "kdvspec/rational.hpp"

#include "kdvspec/error.hpp"

namespace kdvspec {

Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) raise(ErrorCode::SyntaxError, "bad rational literal '" + text + "'");
  if (r.get_den() == 0) raise(ErrorCode::ZeroDenominator, "rational literal '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::NotTotalDerivative: return "NotTotalDerivative";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::DivisionByZeroOperator: return "DivisionByZeroOperator";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OrderTooLow: return "OrderTooLow";
    case ErrorCode::LevelNotFound: return "LevelNotFound";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::IndexBelowLevel: return "IndexBelowLevel";
    case ErrorCode::NonConstantPotential: return "NonConstantPotential";
    case ErrorCode::NonConstantCoefficient: return "NonConstantCoefficient";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroOnCurve: return "ZeroOnCurve";
    case ErrorCode::ZeroSubresultant: return "ZeroSubresultant";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::VanishingPhi2: return "VanishingPhi2";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::NoHyperexponentialSolution: return "NoHyperexponentialSolution";
    case ErrorCode::UnsupportedTower: return "UnsupportedTower";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace kdvspec
