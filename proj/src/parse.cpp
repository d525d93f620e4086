#include "mrg/parse.hpp"

#include <cctype>
#include <string>

#include "mrg/errors.hpp"

namespace mrg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      RatFunc rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  RatFunc term() {
    RatFunc acc = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      std::size_t at = pos_++;
      RatFunc rhs = unary();
      if (c == '*') {
        acc *= rhs;
      } else {
        if (rhs.is_zero()) throw DomainError("division by the zero function at position " + std::to_string(at));
        acc /= rhs;
      }
    }
    return acc;
  }

  RatFunc unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("exponent must be a non-negative integer literal", start);
      Integer e = integer_literal();
      if (!e.fits_slong_p()) throw ParseError("exponent too large", start);
      if (peek() == '^') throw ParseError("chained '^' is not allowed", pos_);
      return base.pow(e.get_si());
    }
    return base;
  }

  Integer integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  RatFunc primary() {
    char c = peek();
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rational(integer_literal()));
    if (c == 'z') {
      ++pos_;
      return RatFunc::z();
    }
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expr(std::string_view text) { return Parser(text).parse(); }

Rational parse_constant(std::string_view text) {
  RatFunc f = parse_expr(text);
  if (!f.is_constant()) throw DomainError("expected a constant, got " + f.to_string());
  return f.constant_value();
}

}  // namespace mrg
