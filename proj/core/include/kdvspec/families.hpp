#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kdvspec/field.hpp"

namespace kdvspec {

/// A potential u in a concrete differential field; never constant.
struct Potential {
  Elem u;
  std::string label;
};

/// Raises NonConstantPotential when u' = 0.
Potential make_potential(const Elem& u, std::string label);

enum class Family { Rational, RosenMorse, Elliptic };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Towers used by the families: Q(x); Q(eta) with eta' = eta (eta = e^x).
FieldContext::Ptr eta_tower();
/// Q(w) with w' = 2w (w = e^{2x}).
FieldContext::Ptr w_tower();

/// s(s+1)/x^2, -s(s+1)/cosh(x)^2 written over eta = e^x, and s(s+1)*wp.
Potential family_potential(Family f, unsigned s);
/// The elliptic family over numeric invariants.
Potential elliptic_potential(unsigned s, const Rat& g2, const Rat& g3);

}  // namespace kdvspec
