#include "practium/expr.hpp"

#include <cctype>
#include <string>

#include "practium/errors.hpp"

namespace practium {

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  // Returns one of: '#' (end), '0' (integer, value in out), '^', '*', '+', '-'.
  char peek() {
    skip_ws();
    if (pos >= text.size()) return '#';
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) return '0';
    if (c == '^' || c == '*' || c == '+' || c == '-') return c;
    throw ParseError("unexpected character '" + std::string(1, c) + "' in expression");
  }

  void consume() { ++pos; }

  Natural integer() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer in expression");
    return Natural(std::string(text.substr(start, pos - start)), 10);
  }
};

// int | int '^' int
Natural parse_atom(Lexer& lex) {
  const Natural base = lex.integer();
  if (lex.peek() == '^') {
    lex.consume();
    const Natural exp = lex.integer();
    if (!exp.fits_ulong_p()) throw ParseError("exponent too large");
    return pow_nat(base, exp.get_ui());
  }
  return base;
}

Natural parse_product_inner(Lexer& lex) {
  Natural value = parse_atom(lex);
  while (lex.peek() == '*') {
    lex.consume();
    value *= parse_atom(lex);
  }
  return value;
}

}  // namespace

Natural parse_product(std::string_view text) {
  Lexer lex{text};
  const Natural value = parse_product_inner(lex);
  if (lex.peek() != '#') throw ParseError("trailing input after product expression");
  return value;
}

Integer parse_sum(std::string_view text) {
  Lexer lex{text};
  Integer value = parse_product_inner(lex);
  for (;;) {
    const char op = lex.peek();
    if (op == '#') return value;
    if (op != '+' && op != '-') throw ParseError("expected '+' or '-' in expression");
    lex.consume();
    const Natural rhs = parse_product_inner(lex);
    if (op == '+') {
      value += rhs;
    } else {
      value -= rhs;
    }
  }
}

}  // namespace practium
