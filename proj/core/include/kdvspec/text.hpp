#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "kdvspec/ratfun.hpp"

namespace kdvspec {

/// Expression grammar shared by the CLI and the golden tests:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := ('+' | '-') unary | power
///   power := atom ('^' ['-'] integer)?
///   atom  := integer | name | name '(' expr ')' | '(' expr ')'
/// Rationals are written p/q, which the grammar reads as a quotient.
struct ParseHooks {
  /// Resolves a bare name; nullopt means UnknownSymbol. The default accepts
  /// any name already present in the symbol table.
  std::function<std::optional<RatFun>(std::string_view)> symbol;
  /// Resolves name(arg); nullopt means UnknownSymbol.
  std::function<std::optional<RatFun>(std::string_view, const RatFun&)> function;
};

/// Raises SyntaxError (message carries the byte offset) or UnknownSymbol.
RatFun parse_ratfun(std::string_view text, const ParseHooks& hooks = {});
MPoly parse_poly(std::string_view text, const ParseHooks& hooks = {});

}  // namespace kdvspec
