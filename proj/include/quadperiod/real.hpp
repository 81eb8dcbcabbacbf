#pragma once

#include "quadperiod/interval.hpp"
#include "quadperiod/numeric.hpp"

#include <string>
#include <variant>

namespace qp {

// Exact or certified real scalar. Three representations:
//   Rational   p/q in lowest terms, q > 0
//   QuadSurd   (p + q*sqrt(d))/r with r > 0, q != 0, d > 1 squarefree,
//              gcd(p, q, r) = 1
//   Interval   certified MPFR enclosure
// Rational/QuadSurd arithmetic is exact and closed as long as radicands
// match; mixing distinct radicands promotes to Interval.
class Real {
 public:
  enum class Kind { rational, surd, interval };

  struct Surd {
    Int p, q, r, d;
  };

  Real() : v_(Rat(0)) {}

  static Real rational(const Rat& q) { return Real(q); }
  static Real integer(const Int& n) { return Real(Rat(n, 1)); }
  static Real integer(long n) { return Real(Rat(n, 1)); }
  // (p + q*sqrt(d))/r. Normalizes; throws DomainError when d <= 0 or a
  // perfect square, DivisionByZero when r = 0. q = 0 demotes to rational.
  static Real surd(Int p, Int q, Int r, Int d);
  static Real interval(Interval iv) { return Real(std::move(iv)); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_rational() const { return kind() == Kind::rational; }
  bool is_surd() const { return kind() == Kind::surd; }
  bool is_interval() const { return kind() == Kind::interval; }
  bool is_exact() const { return !is_interval(); }

  const Rat& as_rational() const;
  const Surd& as_surd() const;
  const Interval& as_interval() const;

  // Exact for rational/surd; certified (or InsufficientPrecision) for
  // intervals.
  int sign() const;
  bool is_zero() const { return is_rational() && as_rational().is_zero(); }
  bool is_integer() const;

  Int floor() const;  // throws InsufficientPrecision when not certifiable
  Int ceil() const;

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real operator-() const;
  Real reciprocal() const;

  // Surd conjugate (q -> -q); identity on rationals.
  Real conjugate() const;

  // Certified three-way comparison: -1, 0, +1.
  int cmp(const Real& o) const { return (*this - o).sign(); }
  int cmp_int(long n) const { return (*this - Real::integer(n)).sign(); }

  // Structural equality; exact kinds compare by value, intervals by
  // endpoints.
  bool operator==(const Real& o) const;
  // Total order on exact values only (for use as map keys); throws on
  // intervals.
  bool exact_less(const Real& o) const;

  Interval to_interval(mpfr_prec_t prec) const;
  double approx() const;
  std::string decimal(int digits) const;
  std::string str() const;  // short debug form

  // Working precision used when exact values must be promoted (distinct
  // radicands).
  static constexpr mpfr_prec_t kPromotePrecision = 192;

  friend Real pow_real(const Real& base, unsigned e);

 private:
  explicit Real(Rat q) : v_(std::move(q)) {}
  explicit Real(Surd s) : v_(std::move(s)) {}
  explicit Real(Interval iv) : v_(std::move(iv)) {}

  std::variant<Rat, Surd, Interval> v_;
};

Real pow_real(const Real& base, unsigned e);

// Rational upper bound on the value (exact for rationals, interval/surd
// enclosures otherwise).
Rat rat_upper(const Real& v);
// Upper bound on |v|.
Rat rat_abs_upper(const Real& v);
// Lower bound on |v| (0 when the sign is not certified).
Rat rat_abs_lower(const Real& v);

}  // namespace qp
