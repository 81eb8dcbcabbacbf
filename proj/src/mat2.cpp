#include "quadperiod/mat2.hpp"

#include "quadperiod/errors.hpp"

#include <sstream>

namespace qp {

Mat2::Mat2(Int r_, Int s_, Int t_, Int u_)
    : r(std::move(r_)), s(std::move(s_)), t(std::move(t_)), u(std::move(u_)) {
  Int d = det();
  if (d != 1 && d != -1) throw DomainError("matrix determinant must be ±1, got " + d.str());
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2(r * o.r + s * o.t, r * o.s + s * o.u, t * o.r + u * o.t, t * o.s + u * o.u);
}

Mat2 Mat2::inverse() const {
  Int d = det();
  if (d == 1) return Mat2(u, -s, -t, r);
  return Mat2(-u, s, t, -r);
}

Mat2 Mat2::pgl_canonical() const {
  const Int* entries[4] = {&r, &s, &t, &u};
  for (const Int* e : entries) {
    if (e->sign() > 0) return *this;
    if (e->sign() < 0) return Mat2(-r, -s, -t, -u);
  }
  return *this;
}

bool Mat2::operator<(const Mat2& o) const {
  if (r != o.r) return r < o.r;
  if (s != o.s) return s < o.s;
  if (t != o.t) return t < o.t;
  return u < o.u;
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[[" << r << "," << s << "],[" << t << "," << u << "]]";
  return os.str();
}

const Mat2& Mat2::identity() {
  static const Mat2 m(1, 0, 0, 1);
  return m;
}
const Mat2& Mat2::eps() {
  static const Mat2 m(0, 1, 1, 0);
  return m;
}
const Mat2& Mat2::sigma() {
  static const Mat2 m(-1, 0, 0, 1);
  return m;
}
const Mat2& Mat2::S() {
  static const Mat2 m(0, -1, 1, 0);
  return m;
}
const Mat2& Mat2::T() {
  static const Mat2 m(1, 1, 0, 1);
  return m;
}
const Mat2& Mat2::U() {
  static const Mat2 m = T() * S();
  return m;
}

Mat2 Mat2::T_pow(const Int& n) { return Mat2(1, n, 0, 1); }

std::optional<Real> mobius(const Mat2& g, const Real& x) {
  Real numer = Real::integer(g.r) * x + Real::integer(g.s);
  Real denom = Real::integer(g.t) * x + Real::integer(g.u);
  if (denom.is_exact() && denom.sign() == 0) return std::nullopt;
  return numer / denom;
}

std::optional<Rat> mobius_infinity(const Mat2& g) {
  if (g.t.is_zero()) return std::nullopt;
  return Rat(g.r, g.t);
}

}  // namespace qp
