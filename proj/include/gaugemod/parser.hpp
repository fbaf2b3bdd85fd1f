#ifndef GAUGEMOD_PARSER_HPP
#define GAUGEMOD_PARSER_HPP

#include "polynomial.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace gaugemod {

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position_(pos) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := unary (('*')? unary)*        juxtaposition multiplies
// unary  := ('-'|'+') unary | power
// power  := primary ('^' integer)?
// primary:= number ('/' number)? | identifier | '(' expr ')'
class PolyParser {
public:
  PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        p += term();
      } else if (c == '-') {
        ++pos_;
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        p *= unary();
      } else if (c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c))) {
        p *= power();
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected non-negative integer exponent", start);
      if (digits.size() > 6) throw BudgetError("exponent too large at position " + std::to_string(start));
      return base.pow(std::stoi(digits));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = read_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", pos_);
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", start);
        lit += "/" + den;
      }
      return Polynomial::constant(ring_, parse_rational(lit));
    }
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& vars = ring_->variables;
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, static_cast<std::size_t>(it - vars.begin()));
    }
    if (c == '\0') throw ParseError("unexpected end of expression", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses integer and `a/b` literals, declared variables, `+ - * ^`, parentheses and unary minus.
inline Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).parse();
}

} // namespace gaugemod

#endif
