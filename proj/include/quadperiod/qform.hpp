#pragma once

#include "quadperiod/intpoly.hpp"
#include "quadperiod/mat2.hpp"
#include "quadperiod/numeric.hpp"
#include "quadperiod/real.hpp"

#include <utility>
#include <vector>

namespace qp {

// Binary quadratic form [a, b, c] = a X^2 + b XY + c Y^2, identified with
// the polynomial a X^2 + b X + c.
struct QForm {
  Int a, b, c;

  Int disc() const { return b * b - 4 * a * c; }
  bool is_simple() const { return a.sign() > 0 && c.sign() < 0; }
  bool is_reduced() const { return a.sign() > 0 && c.sign() > 0 && b > a + c; }

  QForm operator-() const { return {-a, -b, -c}; }
  QForm sigma_conjugate() const { return {a, -b, c}; }  // X -> -X

  Int eval_int(const Int& x) const { return a * x * x + b * x + c; }
  Rat eval_rat(const Rat& x) const { return Rat(a, 1) * x * x + Rat(b, 1) * x + Rat(c, 1); }
  Real eval(const Real& x) const;
  // Q(X, Y) at exact or certified arguments.
  Real eval_pair(const Real& X, const Real& Y) const;
  Rat eval_pair_rat(const Rat& X, const Rat& Y) const;
  // Sign of Q at a rational point or at infinity (nullopt).
  int sign_at(const std::optional<Rat>& x) const;

  IntPoly poly() const { return IntPoly(std::vector<Int>{c, b, a}); }
  Int coeff_norm() const { return abs(a) + abs(b) + abs(c); }

  bool operator==(const QForm& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const QForm& o) const;  // lexicographic

  std::string str() const;
};

// Right action Q|g (X, Y) = Q(rX+sY, tX+uY); preserves the discriminant,
// and act(act(Q,g),h) = act(Q, g*h).
QForm act(const QForm& Q, const Mat2& g);

// Roots (w, w') of Q(X,1) as exact surds: w = (-b - sqrt(D))/(2a).
// Requires positive non-square discriminant.
std::pair<Real, Real> form_roots(const QForm& Q);

enum class FormKind { simple, reduced };

// All simple (a>0>c) or reduced (a>0, c>0, b>a+c) forms of discriminant D,
// sorted. D must be a positive non-square discriminant.
//
// Search bounds: simple forms have ac in [-D/4, -1] with b^2 = D + 4ac;
// reduced forms have sqrt(D) < b <= (D+1)/2 from (a+c)^2 >= 4ac = b^2 - D
// and a + c <= b - 1.
std::vector<QForm> enumerate_forms(const Int& D, FormKind kind);

// [a,b,c] -> [a, b-2a, c-b+a] = Q|T^{-1}, mapping reduced forms onto simple
// forms with a+b+c > 0; `backward` inverts it.
QForm reduced_to_simple(const QForm& Q);
QForm simple_to_reduced(const QForm& Q);

enum class Group { gamma1, gamma };

struct FormClass {
  Group group = Group::gamma1;
  // Cycle orders follow the reduction streams; for merged Gamma classes the
  // constituent Gamma1 cycles are concatenated.
  std::vector<QForm> simple_cycle;
  std::vector<QForm> reduced_cycle;
  QForm representative;  // lexicographically least member

  bool contains_simple(const QForm& Q) const;
  bool operator==(const FormClass& o) const { return representative == o.representative && group == o.group; }
};

// Full class decomposition of discriminant D. Simple-form cycles come from
// the slow reduction stream on -w_Q, reduced-form cycles from the negative
// continued fraction on -w_Q, Gamma classes from merging Gamma1 classes
// under the sigma involution.
std::vector<FormClass> class_decomposition(const Int& D, Group group);

// Finitely many slow-reduction steps take any form with positive non-square
// discriminant to a simple form; returns it with the transporting matrix.
std::pair<QForm, Mat2> reduce_to_simple(const QForm& Q);

// Class of an arbitrary form with positive non-square discriminant, plus a
// matrix g with act(Q, g) a member of the class cycle.
std::pair<FormClass, Mat2> reduce_to_class(const QForm& Q, Group group);

}  // namespace qp
