#include "quadperiod/numeric.hpp"

#include "quadperiod/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cctype>

namespace qp {

Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int floor_rat(const Rat& q) {
  Int n = num(q), d = den(q);
  Int quo = n / d;
  if (n % d != 0 && n.sign() < 0) --quo;
  return quo;
}

Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

Int isqrt(const Int& n) {
  if (n.sign() < 0) throw DomainError("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
  if (n.sign() < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

Int square_part(const Int& n) {
  if (n.sign() <= 0) throw DomainError("square_part needs n > 0");
  Int m = n;
  Int f = 1;
  for (Int p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      f *= p;
    }
  }
  return f;
}

std::vector<Int> divisors(const Int& n) {
  if (n.sign() <= 0) throw DomainError("divisors needs n > 0");
  std::vector<Int> lo, hi;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d * d != n) hi.push_back(n / d);
    }
  }
  for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
  return lo;
}

int moebius(const Int& n) {
  if (n.sign() <= 0) throw DomainError("moebius needs n > 0");
  Int m = n;
  int factors = 0;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      ++factors;
    }
  }
  if (m > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

Int sigma_power(const Int& n, unsigned m) {
  Int total = 0;
  for (const Int& d : divisors(n)) total += pow_int(d, m);
  return total;
}

Int pow_int(const Int& base, unsigned e) {
  Int r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat pow_rat(const Rat& base, unsigned e) {
  Rat r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat rat_from_decimal(const std::string& text) {
  std::size_t i = 0;
  auto fail = [&] { throw SyntaxError("bad decimal literal: " + text); };
  if (text.empty()) fail();
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
  Int mant = 0;
  long scale = 0;
  bool digits = false, dot = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mant = mant * 10 + (ch - '0');
      if (dot) ++scale;
      digits = true;
    } else if (ch == '.' && !dot) {
      dot = true;
    } else if (ch == 'e' || ch == 'E') {
      break;
    } else {
      fail();
    }
  }
  long exp10 = 0;
  if (i < text.size()) {
    ++i;  // past 'e'
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    if (i >= text.size()) fail();
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
      exp10 = exp10 * 10 + (text[i] - '0');
      if (exp10 > 100000) fail();
    }
    if (eneg) exp10 = -exp10;
  }
  if (!digits) fail();
  Rat r(mant, 1);
  long net = exp10 - scale;
  if (net > 0)
    r *= Rat(pow_int(10, static_cast<unsigned>(net)), 1);
  else if (net < 0)
    r /= Rat(pow_int(10, static_cast<unsigned>(-net)), 1);
  return neg ? -r : r;
}

bool is_valid_nonsquare_discriminant(const Int& D) {
  if (D.sign() <= 0) return false;
  Int m = D % 4;
  if (m != 0 && m != 1) return false;
  return !is_perfect_square(D);
}

void require_valid_discriminant(const Int& D) {
  if (D.sign() <= 0) throw NonPositiveDiscriminant("discriminant must be positive, got " + D.str());
  Int m = D % 4;
  if (m != 0 && m != 1) throw InvalidDiscriminant("not a discriminant (D mod 4 must be 0 or 1): " + D.str());
  if (is_perfect_square(D)) throw SquareDiscriminant("square discriminant unsupported: " + D.str());
}

}  // namespace qp
