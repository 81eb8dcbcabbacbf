#pragma once

#include "quadperiod/numeric.hpp"

#include <mpfr.h>

#include <optional>
#include <string>

namespace qp {

// Closed interval [lo, hi] with arbitrary-precision dyadic endpoints.
// Every operation rounds outward, so the true value of any expression is
// always enclosed.
class Interval {
 public:
  Interval();  // [0, 0] at default precision
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_rat(const Rat& q, mpfr_prec_t prec);
  static Interval from_int(const Int& n, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  static Interval e(mpfr_prec_t prec);
  // sqrt(n) for positive integer n.
  static Interval sqrt_int(const Int& n, mpfr_prec_t prec);
  static Interval from_endpoints_hex(const std::string& lo, const std::string& hi, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  // Throws PrecisionLoss if o's sign cannot be certified nonzero,
  // DivisionByZero if o is exactly [0, 0].
  Interval operator/(const Interval& o) const;
  Interval operator-() const;
  Interval reciprocal() const;

  // +1 / -1 when certified, 0 when exactly [0,0]; otherwise throws
  // InsufficientPrecision.
  int sign() const;
  bool contains_zero() const;
  bool is_point() const;

  // Defined only when the whole interval has a single floor value.
  std::optional<Int> floor_exact() const;

  // Exact dyadic endpoints as rationals.
  Rat lower() const;
  Rat upper() const;
  Rat width() const;

  // Intersects with [bound, +inf); used when the enclosed value is known
  // to satisfy the bound exactly.
  Interval clamp_lower(const Rat& bound) const;

  double mid_double() const;
  std::string lower_hex() const;
  std::string upper_hex() const;
  // Midpoint rendered with the given number of significant decimal digits.
  std::string decimal(int digits) const;

 private:
  Interval(mpfr_prec_t prec, bool);
  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

}  // namespace qp
