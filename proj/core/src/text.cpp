#include "kdvspec/text.hpp"

#include <cctype>

#include "kdvspec/error.hpp"

namespace kdvspec {
namespace {

class Parser {
public:
  Parser(std::string_view text, const ParseHooks& hooks) : s_(text), hooks_(hooks) {}

  RatFun parse() {
    RatFun r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& what) {
    raise(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun acc = term();
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  RatFun term() {
    RatFun acc = unary();
    while (true) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        RatFun d = unary();
        if (d.is_zero()) {
          pos_ = at;
          raise(ErrorCode::DivisionByZero, "division by zero at offset " + std::to_string(at));
        }
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFun unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (neg && base.is_zero()) raise(ErrorCode::DivisionByZero, "negative power of zero");
    return base.pow(neg ? -e : e);
  }

  RatFun atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFun(Rat(Int(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (eat('(')) {
        RatFun arg = expr();
        if (!eat(')')) fail("expected ')'");
        std::optional<RatFun> r;
        if (hooks_.function) r = hooks_.function(name, arg);
        if (!r) raise(ErrorCode::UnknownSymbol, "function '" + std::string(name) + "' at offset " + std::to_string(start));
        return *r;
      }
      std::optional<RatFun> r;
      if (hooks_.symbol) {
        r = hooks_.symbol(name);
      } else {
        Var v;
        if (sym::lookup(name, v)) r = RatFun::var(v);
      }
      if (!r) raise(ErrorCode::UnknownSymbol, "'" + std::string(name) + "' at offset " + std::to_string(start));
      return *r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const ParseHooks& hooks_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(std::string_view text, const ParseHooks& hooks) { return Parser(text, hooks).parse(); }

MPoly parse_poly(std::string_view text, const ParseHooks& hooks) {
  RatFun r = parse_ratfun(text, hooks);
  if (!r.is_polynomial()) raise(ErrorCode::SyntaxError, "expected a polynomial: '" + std::string(text) + "'");
  return r.num();
}

}  // namespace kdvspec
