#pragma once

// Expression syntax for noncommutative polynomials:
//   sums and differences with + and -, products with *, integer powers with ^,
//   parentheses, commutators [a, b], and rational scalars (3, 1/2, 0.25).

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "flopwin/ncalg.hpp"

namespace flopwin::nc {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at offset " + std::to_string(pos)), offset(pos) {}
  std::size_t offset;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view s, const Presentation& p) : s_(s), p_(p) {}

  Poly parse() {
    Poly e = expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return e;
  }

 private:
  std::string_view s_;
  const Presentation& p_;
  std::size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  static bool ident_char(char c, bool first) {
    auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalpha(u) || c == '_' || (!first && std::isdigit(u));
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (eat('+'))
        acc.add(term());
      else if (eat('-'))
        acc.add(term(), -1);
      else
        return acc;
    }
  }
  Poly term() {
    Poly acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }
  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Poly power() {
    Poly base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected a nonnegative integer exponent", start);
    long n = std::stol(std::string(s_.substr(start, i_ - start)));
    Poly out = Poly::scalar(1);
    for (long k = 0; k < n; ++k) out = out * base;
    return out;
  }
  Poly atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of expression", i_);
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly e = expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return e;
    }
    if (c == '[') {
      ++i_;
      Poly a = expr();
      if (!eat(',')) throw ParseError("expected ',' in commutator", i_);
      Poly b = expr();
      if (!eat(']')) throw ParseError("expected ']'", i_);
      return a * b - b * a;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.' || s_[i_] == '/'))
        ++i_;
      try {
        return Poly::scalar(parse_rational(s_.substr(start, i_ - start)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (ident_char(c, true)) {
      std::size_t start = i_;
      while (i_ < s_.size() && ident_char(s_[i_], false)) ++i_;
      std::string name(s_.substr(start, i_ - start));
      try {
        return Poly::word(p_.gen(name));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
      }
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", i_);
  }
};

}  // namespace detail

inline Poly parse(std::string_view text, const Presentation& p) { return detail::Parser(text, p).parse(); }

}  // namespace flopwin::nc
