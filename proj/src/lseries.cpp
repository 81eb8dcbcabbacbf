#include "quadperiod/lseries.hpp"

#include "quadperiod/errors.hpp"

namespace qp {

int kronecker(const Int& a, const Int& n) {
  if (n.sign() <= 0) throw DomainError("kronecker symbol needs n >= 1");
  Int m = n;
  int result = 1;
  // Factor out powers of 2: (a/2) = 0 for even a, else +1 iff a = ±1 mod 8.
  if (m % 2 == 0) {
    if (a % 2 == 0) return 0;
    Int a8 = a % 8;
    if (a8.sign() < 0) a8 += 8;
    int two_sym = (a8 == 1 || a8 == 7) ? 1 : -1;
    while (m % 2 == 0) {
      m /= 2;
      result *= two_sym;
    }
  }
  // Jacobi symbol (a/m) for odd m >= 1.
  Int x = a % m;
  if (x.sign() < 0) x += m;
  while (!x.is_zero()) {
    while (x % 2 == 0) {
      x /= 2;
      Int m8 = m % 8;
      if (m8 == 3 || m8 == 5) result = -result;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

std::vector<Rat> bernoulli_numbers(unsigned n) {
  std::vector<Rat> B(n + 1);
  std::vector<Int> binom(n + 2);
  B[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    // binomial row C(m+1, j)
    binom[0] = 1;
    for (unsigned j = 1; j <= m + 1; ++j) binom[j] = binom[j - 1] * Int(m + 2 - j) / Int(j);
    Rat acc = 0;
    for (unsigned j = 0; j < m; ++j) acc += Rat(binom[j], 1) * B[j];
    B[m] = -acc / Rat(m + 1, 1);
  }
  return B;
}

Rat bernoulli_poly(unsigned n, const Rat& t) {
  static thread_local std::vector<Rat> cache = bernoulli_numbers(0);
  if (cache.size() < n + 1) cache = bernoulli_numbers(n + 16);
  Rat acc = 0;
  Int binom = 1;  // C(n, j)
  std::vector<Rat> tpow(n + 1, Rat(1));
  for (unsigned j = 1; j <= n; ++j) tpow[j] = tpow[j - 1] * t;
  for (unsigned j = 0; j <= n; ++j) {
    acc += Rat(binom, 1) * cache[j] * tpow[n - j];
    binom = binom * Int(n - j) / Int(j + 1);
  }
  return acc;
}

std::pair<Int, Int> fundamental_decomposition(const Int& D) {
  require_valid_discriminant(D);
  auto is_fundamental = [](const Int& d) {
    Int m4 = d % 4;
    if (m4 == 1) return square_part(d) == 1;
    if (m4 == 0) {
      Int m = d / 4;
      Int r = m % 4;
      return (r == 2 || r == 3) && square_part(m) == 1;
    }
    return false;
  };
  for (Int f = isqrt(D); f >= 1; --f) {
    if (D % (f * f) != 0) continue;
    Int d0 = D / (f * f);
    Int r = d0 % 4;
    if ((r == 0 || r == 1) && is_fundamental(d0)) return {d0, f};
  }
  throw InvalidDiscriminant("no fundamental decomposition for " + D.str());
}

Rat generalized_bernoulli(const Int& D0, unsigned n) {
  Rat acc = 0;
  for (Int r = 1; r <= D0; ++r) {
    int chi = kronecker(D0, r);
    if (chi == 0) continue;
    acc += Rat(chi, 1) * bernoulli_poly(n, Rat(r, D0));
  }
  unsigned e = n >= 1 ? n - 1 : 0;
  return Rat(pow_int(D0, e), 1) * acc;
}

Rat l_value(const Int& D, const Int& s) {
  require_valid_discriminant(D);
  Int n_int = Int(1) - s;
  if (n_int < 2 || n_int % 2 != 0)
    throw DomainError("l_value defined for s = 1-n with even n >= 2");
  unsigned n = n_int.convert_to<unsigned>();
  auto [d0, f] = fundamental_decomposition(D);
  Rat fundamental = -generalized_bernoulli(d0, n) / Rat(n, 1);
  if (f == 1) return fundamental;
  Rat factor = 0;
  for (const Int& d : divisors(f)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    int chi = kronecker(d0, d);
    if (chi == 0) continue;
    factor += Rat(mu * chi, 1) * Rat(pow_int(d, n - 1), 1) * Rat(sigma_power(f / d, 2 * n - 1), 1);
  }
  return fundamental * factor;
}

}  // namespace qp
