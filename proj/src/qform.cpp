#include "quadperiod/qform.hpp"

#include "quadperiod/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qp {

Real QForm::eval(const Real& x) const {
  return (Real::integer(a) * x + Real::integer(b)) * x + Real::integer(c);
}

Real QForm::eval_pair(const Real& X, const Real& Y) const {
  return Real::integer(a) * X * X + Real::integer(b) * X * Y + Real::integer(c) * Y * Y;
}

Rat QForm::eval_pair_rat(const Rat& X, const Rat& Y) const {
  return Rat(a, 1) * X * X + Rat(b, 1) * X * Y + Rat(c, 1) * Y * Y;
}

int QForm::sign_at(const std::optional<Rat>& x) const {
  if (!x) return a.sign();
  return eval_rat(*x).sign();
}

bool QForm::operator<(const QForm& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

std::string QForm::str() const {
  std::ostringstream os;
  os << "[" << a << "," << b << "," << c << "]";
  return os.str();
}

QForm act(const QForm& Q, const Mat2& g) {
  const Int &r = g.r, &s = g.s, &t = g.t, &u = g.u;
  Int a2 = Q.a * r * r + Q.b * r * t + Q.c * t * t;
  Int b2 = 2 * Q.a * r * s + Q.b * (r * u + s * t) + 2 * Q.c * t * u;
  Int c2 = Q.a * s * s + Q.b * s * u + Q.c * u * u;
  return {a2, b2, c2};
}

std::pair<Real, Real> form_roots(const QForm& Q) {
  Int D = Q.disc();
  if (D.sign() <= 0) throw NonPositiveDiscriminant("form discriminant not positive");
  if (is_perfect_square(D)) throw SquareDiscriminant("form has square discriminant " + D.str());
  return {Real::surd(-Q.b, -1, 2 * Q.a, D), Real::surd(-Q.b, 1, 2 * Q.a, D)};
}

std::vector<QForm> enumerate_forms(const Int& D, FormKind kind) {
  require_valid_discriminant(D);
  std::vector<QForm> out;
  if (kind == FormKind::simple) {
    // ac ranges over [-floor(D/4), -1]; b^2 = D + 4ac must be a square.
    for (Int m = -(D / 4); m <= -1; ++m) {
      Int b2 = D + 4 * m;
      if (b2.sign() < 0 || !is_perfect_square(b2)) continue;
      Int b = isqrt(b2);
      for (const Int& a : divisors(-m)) {
        Int c = m / a;
        out.push_back({a, b, c});
        if (!b.is_zero()) out.push_back({a, -b, c});
      }
    }
  } else {
    Int bmax = (D + 1) / 2;
    for (Int b = isqrt(D) + 1; b <= bmax; ++b) {
      Int m4 = b * b - D;
      if (m4.sign() <= 0 || m4 % 4 != 0) continue;
      Int m = m4 / 4;
      for (const Int& a : divisors(m)) {
        Int c = m / a;
        if (b > a + c) out.push_back({a, b, c});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QForm reduced_to_simple(const QForm& Q) {
  if (!Q.is_reduced()) throw PreconditionViolated("input form is not reduced: " + Q.str());
  return {Q.a, Q.b - 2 * Q.a, Q.c - Q.b + Q.a};
}

QForm simple_to_reduced(const QForm& Q) {
  if (!Q.is_simple()) throw PreconditionViolated("input form is not simple: " + Q.str());
  if ((Q.a + Q.b + Q.c).sign() <= 0)
    throw PreconditionViolated("simple form must have a+b+c > 0: " + Q.str());
  return {Q.a, Q.b + 2 * Q.a, Q.c + Q.b + Q.a};
}

bool FormClass::contains_simple(const QForm& Q) const {
  return std::find(simple_cycle.begin(), simple_cycle.end(), Q) != simple_cycle.end();
}

namespace {

// One step of the slow simple-form reduction, acting on y = -w_Q.
// Returns the step matrix h on states; the form transport is sigma h^{-1}
// sigma.
Mat2 slow_simple_step_matrix(const Real& y) {
  if (y.sign() <= 0) return Mat2::T();
  if (y.cmp_int(1) < 0) return Mat2::T().inverse() * Mat2::S() * Mat2::T().inverse();
  return Mat2::T().inverse();
}

Real apply_mobius_exact(const Mat2& g, const Real& y) {
  auto v = mobius(g, y);
  if (!v) throw DomainError("unexpected pole in cycle transport");
  return *v;
}

Mat2 transport_of(const Mat2& h) { return Mat2::sigma() * h.inverse() * Mat2::sigma(); }

// Cycle of simple forms through Q0 (Q0 simple), ordered by the reduction
// stream.
std::vector<QForm> simple_cycle_of(const QForm& Q0) {
  auto roots = form_roots(Q0);
  Real y0 = -roots.first;
  std::vector<QForm> cycle;
  Real y = y0;
  Mat2 g = Mat2::identity();
  QForm Q = Q0;
  for (int guard = 0; guard < 100000; ++guard) {
    cycle.push_back(Q);
    Mat2 h = slow_simple_step_matrix(y);
    y = apply_mobius_exact(h, y);
    g = g * transport_of(h);
    Q = act(Q0, g);
    if (y == y0) {
      if (!(Q == Q0)) throw AuditFailure("simple cycle did not close on its start form");
      return cycle;
    }
  }
  throw AuditFailure("simple cycle failed to close");
}

// Cycle of reduced forms through R0 (R0 reduced) via the negative continued
// fraction of -w_R.
std::vector<QForm> reduced_cycle_of(const QForm& R0) {
  auto roots = form_roots(R0);
  Real y0 = -roots.first;
  std::vector<QForm> cycle;
  Real y = y0;
  Mat2 g = Mat2::identity();
  QForm R = R0;
  for (int guard = 0; guard < 100000; ++guard) {
    cycle.push_back(R);
    Int m = y.ceil();
    Mat2 h = Mat2::S() * Mat2::T_pow(-m);
    y = apply_mobius_exact(h, y);
    g = g * transport_of(h);
    R = act(R0, g);
    if (y == y0) {
      if (!(R == R0)) throw AuditFailure("reduced cycle did not close on its start form");
      return cycle;
    }
  }
  throw AuditFailure("reduced cycle failed to close");
}

std::vector<QForm> rotate_to_least(std::vector<QForm> cycle) {
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  return cycle;
}

QForm least_member(const FormClass& cls) {
  QForm best = cls.simple_cycle.front();
  for (const auto& q : cls.simple_cycle) best = std::min(best, q);
  for (const auto& q : cls.reduced_cycle) best = std::min(best, q);
  return best;
}

std::vector<FormClass> gamma1_classes(const Int& D) {
  std::vector<QForm> simples = enumerate_forms(D, FormKind::simple);
  std::vector<QForm> reduceds = enumerate_forms(D, FormKind::reduced);
  std::vector<FormClass> classes;
  std::map<QForm, bool> simple_used, reduced_used;
  for (const auto& q : simples) simple_used[q] = false;
  for (const auto& q : reduceds) reduced_used[q] = false;

  for (const auto& q : simples) {
    if (simple_used[q]) continue;
    FormClass cls;
    cls.group = Group::gamma1;
    cls.simple_cycle = rotate_to_least(simple_cycle_of(q));
    for (const auto& m : cls.simple_cycle) {
      auto it = simple_used.find(m);
      if (it == simple_used.end() || it->second)
        throw AuditFailure("simple cycle left the enumerated set at " + m.str());
      it->second = true;
    }
    // The paired reduced cycle comes through the bijection from any cycle
    // member with a+b+c > 0.
    const QForm* pos = nullptr;
    for (const auto& m : cls.simple_cycle)
      if ((m.a + m.b + m.c).sign() > 0) {
        pos = &m;
        break;
      }
    if (!pos) throw AuditFailure("no a+b+c > 0 member in simple cycle of " + q.str());
    cls.reduced_cycle = rotate_to_least(reduced_cycle_of(simple_to_reduced(*pos)));
    for (const auto& m : cls.reduced_cycle) {
      auto it = reduced_used.find(m);
      if (it == reduced_used.end() || it->second)
        throw AuditFailure("reduced cycle left the enumerated set at " + m.str());
      it->second = true;
    }
    cls.representative = least_member(cls);
    classes.push_back(std::move(cls));
  }
  for (const auto& [form, used] : reduced_used)
    if (!used) throw AuditFailure("reduced form missed by class decomposition: " + form.str());
  std::sort(classes.begin(), classes.end(),
            [](const FormClass& a, const FormClass& b) { return a.representative < b.representative; });
  return classes;
}

}  // namespace

std::vector<FormClass> class_decomposition(const Int& D, Group group) {
  std::vector<FormClass> g1 = gamma1_classes(D);
  if (group == Group::gamma1) return g1;

  // Merge Gamma1 classes under the sigma involution [a,b,c] -> [a,-b,c].
  auto class_index_of_simple = [&](const QForm& q) -> std::size_t {
    for (std::size_t i = 0; i < g1.size(); ++i)
      if (g1[i].contains_simple(q)) return i;
    throw AuditFailure("sigma conjugate not found in any class: " + q.str());
  };
  std::vector<bool> used(g1.size(), false);
  std::vector<FormClass> out;
  for (std::size_t i = 0; i < g1.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    FormClass merged;
    merged.group = Group::gamma;
    merged.simple_cycle = g1[i].simple_cycle;
    merged.reduced_cycle = g1[i].reduced_cycle;
    std::size_t j = class_index_of_simple(g1[i].simple_cycle.front().sigma_conjugate());
    if (j != i) {
      if (used[j]) throw AuditFailure("sigma pairing inconsistent");
      used[j] = true;
      merged.simple_cycle.insert(merged.simple_cycle.end(), g1[j].simple_cycle.begin(),
                                 g1[j].simple_cycle.end());
      merged.reduced_cycle.insert(merged.reduced_cycle.end(), g1[j].reduced_cycle.begin(),
                                  g1[j].reduced_cycle.end());
    }
    merged.representative = least_member(merged);
    out.push_back(std::move(merged));
  }
  std::sort(out.begin(), out.end(),
            [](const FormClass& a, const FormClass& b) { return a.representative < b.representative; });
  return out;
}

std::pair<QForm, Mat2> reduce_to_simple(const QForm& Q) {
  if (Q.is_simple()) return {Q, Mat2::identity()};
  auto roots = form_roots(Q);
  Real y = -roots.first;
  Mat2 g = Mat2::identity();
  for (int guard = 0; guard < 100000; ++guard) {
    Mat2 h = slow_simple_step_matrix(y);
    y = apply_mobius_exact(h, y);
    g = g * transport_of(h);
    QForm cur = act(Q, g);
    if (cur.is_simple()) return {cur, g};
  }
  throw AuditFailure("reduction did not reach a simple form: " + Q.str());
}

std::pair<FormClass, Mat2> reduce_to_class(const QForm& Q, Group group) {
  auto [simple, g] = reduce_to_simple(Q);
  auto classes = class_decomposition(Q.disc(), group);
  for (const auto& cls : classes)
    if (cls.contains_simple(simple)) return {cls, g};
  throw AuditFailure("reduction reached unlisted simple form " + simple.str());
}

}  // namespace qp
