#pragma once

#include <string_view>

#include "kdvspec/field.hpp"

namespace kdvspec {

/// rational (x), exponential (eta = e^x), w (w = e^{2x}), weierstrass
/// (symbolic g2, g3). Raises InvalidArgument for anything else.
FieldContext::Ptr tower_by_name(std::string_view name);

/// Parses text as an element of ctx. Over eta = e^x, cosh(k*x), sinh(k*x)
/// and exp(k*x) (k integer) are rewritten in eta; over w = e^{2x}, exp(2k*x)
/// becomes w^k; over the Weierstrass tower wp(x), dwp(x) name the generators
/// and wp(tau), dwp(tau) the parameter constants. A bare x outside those
/// forms raises BasisMismatch when x is not a generator.
Elem parse_element(std::string_view text, const FieldContext::Ptr& ctx);

/// parse_element restricted to what a potential may contain: generators and
/// the invariants g2, g3. Raises UnknownSymbol for lambda, mu, tau, c_i, u.
Elem parse_potential(std::string_view text, const FieldContext::Ptr& ctx);

}  // namespace kdvspec
