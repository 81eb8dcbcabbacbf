#include "quadperiod/interval.hpp"

#include "quadperiod/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <utility>

namespace qp {

namespace {

constexpr mpfr_prec_t kDefaultPrec = 64;

// Exact conversion of one mpfr endpoint to a rational.
Rat mpfr_to_rat(const mpfr_t v) {
  if (mpfr_zero_p(v)) return Rat(0);
  mpz_t mant;
  mpz_init(mant);
  mpfr_exp_t e = mpfr_get_z_2exp(mant, v);
  Int m(mant);
  mpz_clear(mant);
  Rat r(m, 1);
  if (e >= 0) {
    r *= Rat(pow_int(2, static_cast<unsigned>(e)), 1);
  } else {
    r /= Rat(pow_int(2, static_cast<unsigned>(-e)), 1);
  }
  return r;
}

}  // namespace

Interval::Interval(mpfr_prec_t prec, bool) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Interval::Interval() : Interval(kDefaultPrec, true) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : Interval(o.prec_, true) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rat(const Rat& q, mpfr_prec_t prec) {
  Interval r(prec, true);
  mpfr_set_q(r.lo_, q.backend().data(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.backend().data(), MPFR_RNDU);
  return r;
}

Interval Interval::from_int(const Int& n, mpfr_prec_t prec) {
  Interval r(prec, true);
  mpfr_set_z(r.lo_, n.backend().data(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.backend().data(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec, true);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::e(mpfr_prec_t prec) {
  Interval r(prec, true);
  mpfr_t one;
  mpfr_init2(one, 16);
  mpfr_set_ui(one, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, one, MPFR_RNDD);
  mpfr_exp(r.hi_, one, MPFR_RNDU);
  mpfr_clear(one);
  return r;
}

Interval Interval::sqrt_int(const Int& n, mpfr_prec_t prec) {
  if (n.sign() < 0) throw DomainError("sqrt of negative integer");
  Interval in = from_int(n, prec);
  Interval r(prec, true);
  mpfr_sqrt(r.lo_, in.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, in.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::from_endpoints_hex(const std::string& lo, const std::string& hi, mpfr_prec_t prec) {
  Interval r(prec, true);
  if (mpfr_set_str(r.lo_, lo.c_str(), 0, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, hi.c_str(), 0, MPFR_RNDU) != 0)
    throw SyntaxError("bad interval endpoint literal");
  if (mpfr_cmp(r.lo_, r.hi_) > 0) throw SyntaxError("interval endpoints out of order");
  return r;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_), true);
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_), true);
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  mpfr_prec_t p = std::max(prec_, o.prec_);
  Interval r(p, true);
  mpfr_t t;
  mpfr_init2(t, p);
  // lo: minimum of the four endpoint products rounded down.
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // hi: maximum rounded up.
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& o) const { return *this * o.reciprocal(); }

Interval Interval::operator-() const {
  Interval r(prec_, true);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::reciprocal() const {
  if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) throw DivisionByZero("reciprocal of zero interval");
  if (contains_zero())
    throw PrecisionLoss("divisor sign cannot be certified nonzero");
  Interval r(prec_, true);
  mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
  return r;
}

int Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
  throw InsufficientPrecision("interval sign not certified");
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::is_point() const { return mpfr_cmp(lo_, hi_) == 0; }

std::optional<Int> Interval::floor_exact() const {
  mpfr_t fl, fh;
  mpfr_init2(fl, prec_);
  mpfr_init2(fh, prec_);
  mpfr_floor(fl, lo_);
  mpfr_floor(fh, hi_);
  std::optional<Int> res;
  if (mpfr_cmp(fl, fh) == 0) {
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, fl, MPFR_RNDN);
    res = Int(z);
    mpz_clear(z);
  }
  mpfr_clear(fl);
  mpfr_clear(fh);
  return res;
}

Rat Interval::lower() const { return mpfr_to_rat(lo_); }
Rat Interval::upper() const { return mpfr_to_rat(hi_); }
Rat Interval::width() const { return upper() - lower(); }

Interval Interval::clamp_lower(const Rat& bound) const {
  Interval r(*this);
  Interval b = from_rat(bound, prec_);
  if (mpfr_cmp(r.lo_, b.lo_) < 0) mpfr_set(r.lo_, b.lo_, MPFR_RNDD);
  return r;
}

double Interval::mid_double() const {
  return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2;
}

namespace {
std::string hex_of(const mpfr_t v) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", v);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}
}  // namespace

std::string Interval::lower_hex() const { return hex_of(lo_); }
std::string Interval::upper_hex() const { return hex_of(hi_); }

std::string Interval::decimal(int digits) const {
  mpfr_t mid;
  mpfr_init2(mid, prec_ + 8);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, mid);
  std::string s(buf);
  mpfr_free_str(buf);
  mpfr_clear(mid);
  return s;
}

}  // namespace qp
