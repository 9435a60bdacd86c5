#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kdvspec {

/// A variable is identified by its rank in the process-wide symbol table.
/// Lower rank means "declared earlier" and sorts first under lex order.
using Var = std::uint32_t;

namespace sym {

/// Interns a name; unknown names are appended after every known symbol.
Var intern(std::string_view name);
/// Lookup without interning.
bool lookup(std::string_view name, Var& out);
const std::string& name(Var v);

/// Derivative symbols of the differential indeterminate u: u, du, d2u, ...
Var u_derivative(unsigned order);
/// Returns the derivative order when v is one of u, du, d2u, ...; -1 otherwise.
int u_order(Var v);

Var c(unsigned index);  // c1, c2, ...

// Standard symbols, pre-registered in a fixed order so that canonical forms do
// not depend on the order in which a program touches them.
Var x();
Var eta();
Var w();
Var wp();
Var dwp();
Var lambda();
Var mu();
Var tau();
Var wpt();
Var dwpt();
Var g2();
Var g3();
Var z();

}  // namespace sym
}  // namespace kdvspec
