// Recursive-descent parser for the shared expression grammar:
//
//   expr     := term (('+'|'-') term)*
//   term     := unary (('*'|'/') unary)*
//   unary    := '-' unary | factor
//   factor   := base ('^' exponent)?
//   base     := integer | identifier | '(' expr ')'
//   exponent := ['-'] integer | '(' ['-'] integer ['/' integer] ')'
//
// The value algebra is supplied by the caller, so the same grammar yields
// ERat values for the ring and integer polynomials for jet systems.

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "mckay/ering.hpp"

namespace mckay {

/// Algebra requirements:
///   using Value = ...;
///   Value integer(const BigInt&);
///   Value variable(std::string_view name, std::size_t pos);   // throws ParseError
///   Value add(Value, Value); Value sub(Value, Value); Value mul(Value, Value);
///   Value neg(Value);
///   Value div(Value, Value, std::size_t pos);                  // throws ParseError
///   Value pow(Value, const Rational&, std::size_t pos);        // throws ParseError
template <class Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::Value;

  ExprParser(std::string_view text, Algebra& algebra) : text_(text), algebra_(algebra) {}

  Value parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Value result = parse_expr();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return result;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == text_.size()) throw ParseError(std::string("expected '") + c + "', got end of input", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  Value parse_expr() {
    Value acc = parse_term();
    for (;;) {
      if (accept('+')) {
        acc = algebra_.add(std::move(acc), parse_term());
      } else if (accept('-')) {
        acc = algebra_.sub(std::move(acc), parse_term());
      } else {
        return acc;
      }
    }
  }

  Value parse_term() {
    Value acc = parse_unary();
    for (;;) {
      if (accept('*')) {
        acc = algebra_.mul(std::move(acc), parse_unary());
      } else {
        skip_space();
        const std::size_t at = pos_;
        if (accept('/')) {
          acc = algebra_.div(std::move(acc), parse_unary(), at);
        } else {
          return acc;
        }
      }
    }
  }

  Value parse_unary() {
    if (accept('-')) return algebra_.neg(parse_unary());
    return parse_factor();
  }

  Value parse_factor() {
    Value base = parse_base();
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) return algebra_.pow(std::move(base), parse_exponent(), at);
    return base;
  }

  Value parse_base() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return algebra_.integer(parse_unsigned());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return algebra_.variable(text_.substr(start, pos_ - start), start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  BigInt parse_unsigned() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  BigInt parse_signed() {
    const bool negative = accept('-');
    BigInt value = parse_unsigned();
    return negative ? BigInt(-value) : value;
  }

  Rational parse_exponent() {
    if (accept('(')) {
      BigInt numerator = parse_signed();
      BigInt denominator = 1;
      if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        denominator = parse_unsigned();
        if (denominator == 0) throw ParseError("zero exponent denominator", at);
      }
      expect(')');
      return Rational(numerator, denominator);
    }
    return Rational(parse_signed());
  }

  std::string_view text_;
  Algebra& algebra_;
  std::size_t pos_ = 0;
};

}  // namespace mckay
