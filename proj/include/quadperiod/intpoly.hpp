#pragma once

#include "quadperiod/mat2.hpp"
#include "quadperiod/numeric.hpp"
#include "quadperiod/real.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qp {

// Integer-coefficient polynomial, coefficients stored lowest degree first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly constant(const Int& c);
  static IntPoly monomial(int degree, const Int& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }
  Int leading() const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly scale(const Int& k) const;
  IntPoly pow(unsigned e) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  Int eval_int(const Int& x) const;
  Rat eval_rat(const Rat& x) const;
  Real eval(const Real& x) const;
  // Homogeneous evaluation at degree d >= degree(): sum c_j X^j Y^(d-j).
  Real eval_homogeneous(const Real& X, const Real& Y, int d) const;
  Rat eval_homogeneous_rat(const Rat& X, const Rat& Y, int d) const;

  IntPoly derivative() const;
  // Sum of |coefficients| of the degree-d homogenization (= plain
  // coefficient 1-norm).
  Int coeff_norm() const;

  // (P+, P-) with P+ even, P- odd, P = P+ + P-.
  std::pair<IntPoly, IntPoly> even_odd_split() const;
  bool is_even_poly() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Weight-d right action (P|g)(x) = (tx+u)^d P((rx+s)/(tx+u)); requires
// deg P <= d. Integral for integer matrices.
IntPoly slash(const IntPoly& P, const Mat2& g, int d);

// Number of distinct real roots, by Sturm chains over exact rationals.
int count_real_roots(const IntPoly& P);
int count_real_roots_in(const IntPoly& P, const Rat& lo, const Rat& hi);

// True iff P has a rational root (exhaustive rational-root test).
bool has_rational_root(const IntPoly& P);

// Exactly 2 real roots, both irrational, degree <= d. Throws NotInFd /
// WrongDegree.
void certify_in_Fd(const IntPoly& P, int d);

// The two real roots of P in F_d, labeled so that
// sign(P(inf))*w < sign(P(inf))*w'. Degree-2 polynomials give exact surds;
// higher degrees give certified intervals at `prec` bits.
std::pair<Real, Real> poly_roots(const IntPoly& P, mpfr_prec_t prec = 128);

struct QuarticInvariants {
  Int I, J;
  Int disc;  // (4 I^3 - J^2)/27
};
QuarticInvariants quartic_invariants(const IntPoly& P);  // degree exactly 4

}  // namespace qp
