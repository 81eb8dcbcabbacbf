#include "quadperiod/real.hpp"

#include "quadperiod/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qp {

namespace {

// Sign of p + q*sqrt(d) with d > 1 non-square, by exact integer tests.
int surd_numerator_sign(const Int& p, const Int& q, const Int& d) {
  int sp = p.sign(), sq = q.sign();
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 against q^2 d.
  Int lhs = p * p, rhs = q * q * d;
  if (lhs == rhs) throw DomainError("square radicand slipped through normalization");
  bool p_dominates = lhs > rhs;
  return p_dominates ? sp : sq;
}

}  // namespace

Real Real::surd(Int p, Int q, Int r, Int d) {
  if (r.is_zero()) throw DivisionByZero("surd with zero denominator");
  if (d.sign() <= 0) throw DomainError("surd radicand must be positive");
  Int f = square_part(d);
  if (f != 1) {
    q *= f;
    d /= f * f;
  }
  if (d == 1) throw DomainError("radicand is a perfect square; use a rational");
  if (q.is_zero()) return rational(Rat(p, r));
  if (r.sign() < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  Int g = gcd_int(gcd_int(abs(p), abs(q)), r);
  if (g > 1) {
    p /= g;
    q /= g;
    r /= g;
  }
  return Real(Surd{std::move(p), std::move(q), std::move(r), std::move(d)});
}

const Rat& Real::as_rational() const {
  if (!is_rational()) throw DomainError("not a rational");
  return std::get<Rat>(v_);
}

const Real::Surd& Real::as_surd() const {
  if (!is_surd()) throw DomainError("not a surd");
  return std::get<Surd>(v_);
}

const Interval& Real::as_interval() const {
  if (!is_interval()) throw DomainError("not an interval");
  return std::get<Interval>(v_);
}

int Real::sign() const {
  switch (kind()) {
    case Kind::rational:
      return as_rational().sign();
    case Kind::surd: {
      const Surd& s = as_surd();
      return surd_numerator_sign(s.p, s.q, s.d);
    }
    case Kind::interval:
      return as_interval().sign();
  }
  return 0;
}

bool Real::is_integer() const {
  switch (kind()) {
    case Kind::rational:
      return den(as_rational()) == 1;
    case Kind::surd:
      return false;
    case Kind::interval: {
      const Interval& iv = as_interval();
      if (!iv.is_point()) return false;
      Rat v = iv.lower();
      return den(v) == 1;
    }
  }
  return false;
}

Int Real::floor() const {
  switch (kind()) {
    case Kind::rational:
      return floor_rat(as_rational());
    case Kind::surd: {
      // A surd is never an integer, so some refinement level certifies.
      for (mpfr_prec_t prec = 128; prec <= 1 << 20; prec *= 2) {
        auto f = to_interval(prec).floor_exact();
        if (f) return *f;
      }
      throw InsufficientPrecision("surd floor did not certify");
    }
    case Kind::interval: {
      auto f = as_interval().floor_exact();
      if (!f) throw InsufficientPrecision("interval straddles an integer");
      return *f;
    }
  }
  throw DomainError("unreachable");
}

Int Real::ceil() const { return -(-*this).floor(); }

Real Real::operator-() const {
  switch (kind()) {
    case Kind::rational:
      return Real(-as_rational());
    case Kind::surd: {
      const Surd& s = as_surd();
      return Real(Surd{-s.p, -s.q, s.r, s.d});
    }
    case Kind::interval:
      return Real(-as_interval());
  }
  throw DomainError("unreachable");
}

Real Real::operator+(const Real& o) const {
  if (is_rational() && o.is_rational()) return Real(as_rational() + o.as_rational());
  if (is_exact() && o.is_exact()) {
    // At least one surd.
    if (is_rational()) return o + *this;
    const Surd& a = as_surd();
    if (o.is_rational()) {
      const Rat& b = o.as_rational();
      // (p + q sqrt d)/r + n/m = ((pm + nr) + qm sqrt d)/(rm)
      return surd(a.p * den(b) + num(b) * a.r, a.q * den(b), a.r * den(b), a.d);
    }
    const Surd& b = o.as_surd();
    if (a.d == b.d)
      return surd(a.p * b.r + b.p * a.r, a.q * b.r + b.q * a.r, a.r * b.r, a.d);
    // Distinct radicands: promote.
    return Real(to_interval(kPromotePrecision) + o.to_interval(kPromotePrecision));
  }
  mpfr_prec_t prec = std::max(is_interval() ? as_interval().precision() : 0,
                              o.is_interval() ? o.as_interval().precision() : 0);
  return Real(to_interval(prec) + o.to_interval(prec));
}

Real Real::operator-(const Real& o) const { return *this + (-o); }

Real Real::operator*(const Real& o) const {
  if (is_rational() && o.is_rational()) return Real(as_rational() * o.as_rational());
  if (is_exact() && o.is_exact()) {
    if (is_rational()) return o * *this;
    const Surd& a = as_surd();
    if (o.is_rational()) {
      const Rat& b = o.as_rational();
      if (b.is_zero()) return rational(Rat(0));
      return surd(a.p * num(b), a.q * num(b), a.r * den(b), a.d);
    }
    const Surd& b = o.as_surd();
    if (a.d == b.d)
      return surd(a.p * b.p + a.q * b.q * a.d, a.p * b.q + a.q * b.p, a.r * b.r, a.d);
    return Real(to_interval(kPromotePrecision) * o.to_interval(kPromotePrecision));
  }
  mpfr_prec_t prec = std::max(is_interval() ? as_interval().precision() : 0,
                              o.is_interval() ? o.as_interval().precision() : 0);
  return Real(to_interval(prec) * o.to_interval(prec));
}

Real Real::reciprocal() const {
  switch (kind()) {
    case Kind::rational: {
      const Rat& q = as_rational();
      if (q.is_zero()) throw DivisionByZero("reciprocal of zero");
      return Real(Rat(1) / q);
    }
    case Kind::surd: {
      const Surd& s = as_surd();
      // r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
      Int norm = s.p * s.p - s.q * s.q * s.d;
      return surd(s.r * s.p, -s.r * s.q, norm, s.d);
    }
    case Kind::interval:
      return Real(as_interval().reciprocal());
  }
  throw DomainError("unreachable");
}

Real Real::operator/(const Real& o) const {
  if (o.is_exact() && o.sign() == 0) throw DivisionByZero("division by zero");
  return *this * o.reciprocal();
}

Real Real::conjugate() const {
  if (is_surd()) {
    const Surd& s = as_surd();
    return Real(Surd{s.p, -s.q, s.r, s.d});
  }
  if (is_rational()) return *this;
  throw DomainError("conjugate of an interval is undefined");
}

bool Real::operator==(const Real& o) const {
  if (kind() != o.kind()) {
    // Exact cross-kind comparison is meaningful (rational vs surd is never
    // equal; surd normalization is canonical).
    if (is_exact() && o.is_exact()) return false;
    return false;
  }
  switch (kind()) {
    case Kind::rational:
      return as_rational() == o.as_rational();
    case Kind::surd: {
      const Surd& a = as_surd();
      const Surd& b = o.as_surd();
      return a.p == b.p && a.q == b.q && a.r == b.r && a.d == b.d;
    }
    case Kind::interval:
      return as_interval().lower() == o.as_interval().lower() &&
             as_interval().upper() == o.as_interval().upper();
  }
  return false;
}

bool Real::exact_less(const Real& o) const {
  if (!is_exact() || !o.is_exact()) throw DomainError("exact_less needs exact values");
  if (*this == o) return false;
  return cmp(o) < 0;
}

Interval Real::to_interval(mpfr_prec_t prec) const {
  if (prec <= 0) prec = kPromotePrecision;
  switch (kind()) {
    case Kind::rational:
      return Interval::from_rat(as_rational(), prec);
    case Kind::surd: {
      const Surd& s = as_surd();
      Interval root = Interval::sqrt_int(s.d, prec);
      Interval v = Interval::from_int(s.p, prec) + Interval::from_int(s.q, prec) * root;
      return v / Interval::from_int(s.r, prec);
    }
    case Kind::interval:
      return as_interval();
  }
  throw DomainError("unreachable");
}

double Real::approx() const { return to_interval(64).mid_double(); }

std::string Real::decimal(int digits) const {
  return to_interval(static_cast<mpfr_prec_t>(digits * 4 + 64)).decimal(digits);
}

Real pow_real(const Real& base, unsigned e) {
  Real r = Real::integer(1), b = base;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Rat rat_upper(const Real& v) {
  switch (v.kind()) {
    case Real::Kind::rational:
      return v.as_rational();
    case Real::Kind::surd:
      return v.to_interval(96).upper();
    case Real::Kind::interval:
      return v.as_interval().upper();
  }
  return Rat(0);
}

Rat rat_abs_upper(const Real& v) {
  Rat hi = rat_upper(v);
  Rat lo_neg = rat_upper(-v);
  return std::max(hi, lo_neg);
}

Rat rat_abs_lower(const Real& v) {
  Rat hi = rat_upper(v);       // v <= hi
  Rat lo = -rat_upper(-v);     // v >= lo
  if (lo.sign() > 0) return lo;
  if (hi.sign() < 0) return -hi;
  return Rat(0);
}

std::string Real::str() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::rational:
      os << as_rational();
      break;
    case Kind::surd: {
      const Surd& s = as_surd();
      os << "(" << s.p << (s.q.sign() < 0 ? "-" : "+") << abs(s.q) << "*sqrt(" << s.d << "))/"
         << s.r;
      break;
    }
    case Kind::interval:
      os << "[" << as_interval().decimal(12) << " w=" << as_interval().width().convert_to<double>()
         << "]";
      break;
  }
  return os.str();
}

}  // namespace qp
