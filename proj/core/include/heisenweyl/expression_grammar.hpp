#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "heisenweyl/scalar.hpp"

namespace heisenweyl {

/// Syntax error with a byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Exponent as written: numerator / denominator with denominator 1 or 2.
struct WrittenExponent {
  int num = 1;
  int den = 1;
};

/// Recursive-descent parser shared by the scalar and the free-algebra
/// front ends:
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor | factor)*        juxtaposition = '*'
///   factor  := primary ('^' exponent)?
///   primary := integer | identifier | '(' expr ')' | '[' ['-'] integer ']' ['_' '{' id ',' id '}'] ['!']
///   exponent:= ['-'] integer | '(' ['-'] integer ['/' integer] ')'
///
/// Hooks supplies: identifier(name, pos), integer(long), bracket(n, pos),
/// bracket_factorial(n, pos), power(base, exp, atom_name, pos),
/// divide(a, b, pos). Value needs +, -, *, unary -.
template <class Value, class Hooks>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, Hooks& hooks) : text_(text), hooks_(hooks) {}

  Value parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      skip_ws();
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }
  bool at_primary_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[';
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) throw ParseError("integer literal too large", start);
    return std::stol(digits);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected identifier", pos_);
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      // "[n]_{p,q}" style suffixes never follow identifiers, so '_' is part of a name.
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Value expr() {
    bool negate = false;
    if (accept('+')) {
    } else if (accept('-')) {
      negate = true;
    }
    Value acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Value term() {
    Value acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (peek('/')) {
        std::size_t at = pos_;
        ++pos_;
        acc = hooks_.divide(acc, factor(), at);
      } else if (at_primary_start()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Value factor() {
    skip_ws();
    std::size_t at = pos_;
    std::optional<std::string> atom;
    Value base = primary(atom);
    if (accept('^')) {
      WrittenExponent e = exponent();
      return hooks_.power(base, e, atom, at);
    }
    return base;
  }

  WrittenExponent exponent() {
    WrittenExponent e;
    if (accept('(')) {
      bool neg = accept('-');
      e.num = static_cast<int>(integer());
      if (accept('/')) e.den = static_cast<int>(integer());
      expect(')');
      if (neg) e.num = -e.num;
    } else {
      bool neg = accept('-');
      e.num = static_cast<int>(integer());
      if (neg) e.num = -e.num;
    }
    if (e.den != 1 && e.den != 2) throw ParseError("only integer or half-integer exponents are supported", pos_);
    if (e.den == 2 && e.num % 2 == 0) e = {e.num / 2, 1};
    return e;
  }

  Value primary(std::optional<std::string>& atom) {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return hooks_.integer(integer());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = identifier();
      atom = name;
      return hooks_.identifier(name, at);
    }
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (accept('[')) {
      bool neg = accept('-');
      int n = static_cast<int>(integer());
      if (neg) n = -n;
      expect(']');
      if (accept('_')) {
        expect('{');
        std::string a = identifier();
        expect(',');
        std::string b = identifier();
        expect('}');
        if (a != "p" || b != "q") throw ParseError("only [n]_{p,q} brackets are supported", at);
      }
      if (accept('!')) return hooks_.bracket_factorial(n, at);
      return hooks_.bracket(n, at);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Hooks& hooks_;
};

}  // namespace heisenweyl
