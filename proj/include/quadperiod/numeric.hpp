#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace qp {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

inline int sign_of(const Int& n) { return n.sign(); }
inline int sign_of(const Rat& q) { return q.sign(); }

Int gcd_int(const Int& a, const Int& b);

// Floor / ceil of a rational as exact integers.
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

// Integer square root and exact-square test.
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);

// Largest f with f^2 | n, so n = f^2 * squarefree_part(n). n > 0.
Int square_part(const Int& n);

// Positive divisors of n > 0, ascending.
std::vector<Int> divisors(const Int& n);

// Moebius function; n > 0.
int moebius(const Int& n);

// Sum of m-th powers of divisors of n > 0.
Int sigma_power(const Int& n, unsigned m);

Int pow_int(const Int& base, unsigned e);
Rat pow_rat(const Rat& base, unsigned e);

// Parses decimal/scientific literals like "1e-8" or "0.25" exactly.
Rat rat_from_decimal(const std::string& text);

// b^2-4ac style discriminant sanity: true iff D > 0, D = 0,1 mod 4,
// D not a perfect square.
bool is_valid_nonsquare_discriminant(const Int& D);
void require_valid_discriminant(const Int& D);

}  // namespace qp
