#pragma once

#include "quadperiod/numeric.hpp"
#include "quadperiod/real.hpp"

#include <optional>
#include <string>

namespace qp {

// Integer 2x2 matrix [[r, s], [t, u]] with det = ±1, viewed as an element
// of PGL2(Z) (PSL2(Z) when det = +1). Entry-level equality is exact;
// pgl_canonical() gives the sign-normalized representative (first nonzero
// entry positive) for set comparisons.
struct Mat2 {
  Int r, s, t, u;

  Mat2(Int r_, Int s_, Int t_, Int u_);

  Int det() const { return r * u - s * t; }
  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;
  Mat2 pgl_canonical() const;

  bool operator==(const Mat2& o) const { return r == o.r && s == o.s && t == o.t && u == o.u; }
  bool operator<(const Mat2& o) const;  // lexicographic on entries

  std::string str() const;

  static const Mat2& identity();
  static const Mat2& eps();    // [[0,1],[1,0]]
  static const Mat2& sigma();  // [[-1,0],[0,1]]
  static const Mat2& S();      // [[0,-1],[1,0]]
  static const Mat2& T();      // [[1,1],[0,1]]
  static const Mat2& U();      // T*S = [[1,-1],[1,0]]
  static Mat2 T_pow(const Int& n);
};

// Moebius action; nullopt encodes the point at infinity. Exact inputs give
// exact results; interval input throws InsufficientPrecision when the
// denominator's sign cannot be certified.
std::optional<Real> mobius(const Mat2& g, const Real& x);

// g(inf) = r/t; nullopt when t = 0.
std::optional<Rat> mobius_infinity(const Mat2& g);

}  // namespace qp
