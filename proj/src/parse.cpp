#include "quadperiod/parse.hpp"

#include "quadperiod/errors.hpp"

#include <cctype>

namespace qp {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool eat_word(const char* w) {
    std::size_t n = std::char_traits<char>::length(w);
    if (s.compare(i, n, w) == 0) {
      i += n;
      return true;
    }
    return false;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("parse error at offset " + std::to_string(i) + ": " + what + " in \"" + s +
                      "\"");
  }
};

Int parse_uint(Cursor& c) {
  if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    c.fail("expected digits");
  Int v = 0;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    v = v * 10 + (c.s[c.i] - '0');
    ++c.i;
  }
  return v;
}

// uint with optional fractional part -> exact rational.
Rat parse_decimal(Cursor& c) {
  Int whole = parse_uint(c);
  if (c.i < c.s.size() && c.s[c.i] == '.') {
    ++c.i;
    std::size_t start = c.i;
    Int frac = parse_uint(c);
    unsigned places = static_cast<unsigned>(c.i - start);
    Int scale = pow_int(10, places);
    return Rat(whole * scale + frac, scale);
  }
  return Rat(whole, 1);
}

// sqrt(D) possibly scaled: [m *] sqrt(D)
Real parse_sqrt_term(Cursor& c, const Int& scale) {
  if (!c.eat_word("sqrt(")) c.fail("expected sqrt(");
  Int d = parse_uint(c);
  if (!c.eat(')')) c.fail("expected )");
  if (d.sign() <= 0 || is_perfect_square(d))
    throw DomainError("sqrt argument must be a positive non-square: " + d.str());
  return Real::surd(0, scale, 1, d);
}

bool starts_sqrt(const Cursor& c) { return c.s.compare(c.i, 5, "sqrt(") == 0; }

bool starts_sqrt_scaled(const Cursor& c) {
  std::size_t j = c.i;
  while (j < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[j]))) ++j;
  if (j == c.i || j >= c.s.size() || c.s[j] != '*') return false;
  return c.s.compare(j + 1, 5, "sqrt(") == 0;
}

// ( a ± [b*]sqrt(D) ) [/ r]    or    ( sqrt(D) ± ... ) variants
Real parse_paren_surd(Cursor& c, mpfr_prec_t prec) {
  if (!c.eat('(')) c.fail("expected (");
  c.skip_ws();
  int sign1 = 1;
  if (c.eat('-'))
    sign1 = -1;
  else
    c.eat('+');
  c.skip_ws();

  Real first = Real::integer(0);
  bool first_is_surd = false;
  if (starts_sqrt(c)) {
    first = parse_sqrt_term(c, sign1);
    first_is_surd = true;
  } else if (starts_sqrt_scaled(c)) {
    Int m = parse_uint(c);
    c.eat('*');
    first = parse_sqrt_term(c, sign1 * m);
    first_is_surd = true;
  } else {
    Int a = parse_uint(c);
    first = Real::rational(Rat(sign1 * a, 1));
  }
  c.skip_ws();

  Real value = first;
  if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) {
    int sign2 = c.s[c.i] == '-' ? -1 : 1;
    ++c.i;
    c.skip_ws();
    Real second = Real::integer(0);
    if (starts_sqrt(c)) {
      second = parse_sqrt_term(c, sign2);
    } else if (starts_sqrt_scaled(c)) {
      Int m = parse_uint(c);
      c.eat('*');
      second = parse_sqrt_term(c, sign2 * m);
    } else if (first_is_surd) {
      Int a = parse_uint(c);
      second = Real::rational(Rat(sign2 * a, 1));
    } else {
      c.fail("expected sqrt term");
    }
    value = first + second;
  }
  c.skip_ws();
  if (!c.eat(')')) c.fail("expected )");
  if (c.eat('/')) {
    Int r = parse_uint(c);
    if (r.is_zero()) throw DivisionByZero("zero denominator");
    value = value / Real::integer(r);
  }
  (void)prec;
  return value;
}

Real parse_body(Cursor& c, mpfr_prec_t prec) {
  c.skip_ws();
  if (c.eat_word("pi")) return Real::interval(Interval::pi(prec));
  if (c.eat_word("e") && !(c.i < c.s.size() && std::isalnum(static_cast<unsigned char>(c.s[c.i]))))
    return Real::interval(Interval::e(prec));
  if (c.i < c.s.size() && c.s[c.i] == '(') return parse_paren_surd(c, prec);
  if (starts_sqrt(c)) return parse_sqrt_term(c, 1);
  if (starts_sqrt_scaled(c)) {
    Int m = parse_uint(c);
    c.eat('*');
    return parse_sqrt_term(c, m);
  }
  // number, possibly a fraction; "1/pi" and "1/e" route to constants
  Rat v = parse_decimal(c);
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    if (c.eat_word("pi")) {
      if (den(v) != 1) c.fail("only integer numerators over pi");
      return Real::rational(v) * Real::interval(Interval::pi(prec)).reciprocal();
    }
    if (c.eat_word("e")) {
      if (den(v) != 1) c.fail("only integer numerators over e");
      return Real::rational(v) * Real::interval(Interval::e(prec)).reciprocal();
    }
    Int d = parse_uint(c);
    if (d.is_zero()) throw DivisionByZero("zero denominator");
    return Real::rational(v / Rat(d, 1));
  }
  return Real::rational(v);
}

}  // namespace

Real parse_real(const std::string& text, mpfr_prec_t prec) {
  Cursor c{text};
  c.skip_ws();
  int sign = 1;
  if (c.eat('-'))
    sign = -1;
  else
    c.eat('+');
  Real v = parse_body(c, prec);
  if (!c.done()) c.fail("trailing input");
  return sign < 0 ? -v : v;
}

}  // namespace qp
