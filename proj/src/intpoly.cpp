#include "quadperiod/intpoly.hpp"

#include "quadperiod/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qp {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(int degree, const Int& c) {
  std::vector<Int> v(degree + 1, Int(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Int IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
  return c_[i];
}

Int IntPoly::leading() const {
  if (is_zero()) return Int(0);
  return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  std::vector<Int> v(c_);
  for (auto& x : v) x = -x;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scale(const Int& k) const {
  std::vector<Int> v(c_);
  for (auto& x : v) x *= k;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r = constant(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Int IntPoly::eval_int(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::eval_rat(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it, 1);
  return acc;
}

Real IntPoly::eval(const Real& x) const {
  Real acc = Real::integer(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Real::integer(*it);
  return acc;
}

Real IntPoly::eval_homogeneous(const Real& X, const Real& Y, int d) const {
  if (degree() > d) throw WrongDegree("homogenization degree below polynomial degree");
  Real total = Real::integer(0);
  Real xp = Real::integer(1);
  std::vector<Real> ypow(d + 1, Real::integer(1));
  for (int j = 1; j <= d; ++j) ypow[j] = ypow[j - 1] * Y;
  for (int j = 0; j <= d; ++j) {
    Int cj = coeff(j);
    if (!cj.is_zero()) total = total + Real::integer(cj) * xp * ypow[d - j];
    if (j < d) xp = xp * X;
  }
  return total;
}

Rat IntPoly::eval_homogeneous_rat(const Rat& X, const Rat& Y, int d) const {
  if (degree() > d) throw WrongDegree("homogenization degree below polynomial degree");
  Rat total = 0;
  Rat xp = 1;
  std::vector<Rat> ypow(d + 1, Rat(1));
  for (int j = 1; j <= d; ++j) ypow[j] = ypow[j - 1] * Y;
  for (int j = 0; j <= d; ++j) {
    Int cj = coeff(j);
    if (!cj.is_zero()) total += Rat(cj, 1) * xp * ypow[d - j];
    if (j < d) xp *= X;
  }
  return total;
}

IntPoly IntPoly::derivative() const {
  if (degree() <= 0) return IntPoly();
  std::vector<Int> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(i);
  return IntPoly(std::move(v));
}

Int IntPoly::coeff_norm() const {
  Int s = 0;
  for (const auto& x : c_) s += abs(x);
  return s;
}

std::pair<IntPoly, IntPoly> IntPoly::even_odd_split() const {
  std::vector<Int> ev(c_.size(), Int(0)), od(c_.size(), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) (i % 2 == 0 ? ev : od)[i] = c_[i];
  return {IntPoly(std::move(ev)), IntPoly(std::move(od))};
}

bool IntPoly::is_even_poly() const {
  for (std::size_t i = 1; i < c_.size(); i += 2)
    if (!c_[i].is_zero()) return false;
  return true;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    Int cj = coeff(j);
    if (cj.is_zero()) continue;
    if (!first) os << (cj.sign() > 0 ? " + " : " - ");
    else if (cj.sign() < 0) os << "-";
    Int a = abs(cj);
    if (a != 1 || j == 0) os << a;
    if (j > 0) os << "X";
    if (j > 1) os << "^" << j;
    first = false;
  }
  return os.str();
}

IntPoly slash(const IntPoly& P, const Mat2& g, int d) {
  if (P.degree() > d) throw WrongDegree("slash weight below polynomial degree");
  // sum_j c_j (rX+s)^j (tX+u)^(d-j)
  IntPoly top(std::vector<Int>{g.s, g.r});    // rX+s
  IntPoly bot(std::vector<Int>{g.u, g.t});    // tX+u
  std::vector<IntPoly> top_pow(d + 1), bot_pow(d + 1);
  top_pow[0] = IntPoly::constant(1);
  bot_pow[0] = IntPoly::constant(1);
  for (int j = 1; j <= d; ++j) {
    top_pow[j] = top_pow[j - 1] * top;
    bot_pow[j] = bot_pow[j - 1] * bot;
  }
  IntPoly out;
  for (int j = 0; j <= d; ++j) {
    Int cj = P.coeff(j);
    if (cj.is_zero()) continue;
    out = out + (top_pow[j] * bot_pow[d - j]).scale(cj);
  }
  return out;
}

namespace {

// Rational-coefficient polynomial, used only by the Sturm machinery.
struct RatPoly {
  std::vector<Rat> c;  // lowest degree first, trimmed

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  int sign_at_pos_inf() const { return is_zero() ? 0 : c.back().sign(); }
  int sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = c.back().sign();
    return degree() % 2 == 0 ? s : -s;
  }
};

RatPoly to_rat_poly(const IntPoly& p) {
  RatPoly r;
  for (const auto& x : p.coeffs()) r.c.push_back(Rat(x, 1));
  return r;
}

RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rat f = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] -= f * b.c[i];
    a.c.pop_back();
    a.trim();
  }
  return a;
}

std::vector<RatPoly> sturm_chain(const IntPoly& P) {
  std::vector<RatPoly> chain;
  chain.push_back(to_rat_poly(P));
  chain.push_back(to_rat_poly(P.derivative()));
  while (!chain.back().is_zero()) {
    RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    for (auto& x : r.c) x = -x;
    r.trim();
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<int>& signs) {
  int prev = 0, changes = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  for (const auto& p : chain) signs.push_back(p.eval(x).sign());
  return sign_changes(signs);
}

int variations_at_inf(const std::vector<RatPoly>& chain, bool positive) {
  std::vector<int> signs;
  for (const auto& p : chain)
    signs.push_back(positive ? p.sign_at_pos_inf() : p.sign_at_neg_inf());
  return sign_changes(signs);
}

// Cauchy bound: all real roots lie in (-B, B).
Rat root_bound(const IntPoly& P) {
  Int lead = abs(P.leading());
  Int maxc = 0;
  for (const auto& c : P.coeffs()) maxc = std::max(maxc, abs(c));
  return Rat(maxc, lead) + 2;
}

}  // namespace

int count_real_roots(const IntPoly& P) {
  if (P.degree() <= 0) return 0;
  auto chain = sturm_chain(P);
  return variations_at_inf(chain, false) - variations_at_inf(chain, true);
}

int count_real_roots_in(const IntPoly& P, const Rat& lo, const Rat& hi) {
  if (P.degree() <= 0) return 0;
  auto chain = sturm_chain(P);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

bool has_rational_root(const IntPoly& P) {
  if (P.is_zero()) return true;
  // Strip content-free: candidates p/q with p | c0, q | lead. Factor out
  // X^m first.
  std::vector<Int> cs = P.coeffs();
  std::size_t shift = 0;
  while (shift < cs.size() && cs[shift].is_zero()) ++shift;
  if (shift > 0) return true;  // root at 0
  Int c0 = abs(cs.front());
  Int lead = abs(cs.back());
  for (const Int& p : divisors(c0)) {
    for (const Int& q : divisors(lead)) {
      Rat cand(p, q);
      if (P.eval_rat(cand).is_zero() || P.eval_rat(-cand).is_zero()) return true;
    }
  }
  return false;
}

void certify_in_Fd(const IntPoly& P, int d) {
  if (P.degree() > d) throw WrongDegree("degree exceeds bound");
  if (P.degree() < 2) throw NotInFd("degree too small for two real roots");
  // Sturm counts distinct roots, so reject repeated roots first.
  {
    RatPoly a = to_rat_poly(P), b = to_rat_poly(P.derivative());
    while (!b.is_zero()) {
      RatPoly r = poly_rem(a, b);
      a = b;
      b = std::move(r);
    }
    if (a.degree() >= 1) throw NotInFd("polynomial has repeated roots");
  }
  int roots = count_real_roots(P);
  if (roots != 2) throw NotInFd("real root count is " + std::to_string(roots) + ", need 2");
  if (has_rational_root(P)) throw NotInFd("polynomial has a rational root");
}

std::pair<Real, Real> poly_roots(const IntPoly& P, mpfr_prec_t prec) {
  if (P.degree() == 2) {
    Int a = P.coeff(2), b = P.coeff(1), c = P.coeff(0);
    Int D = b * b - 4 * a * c;
    if (D.sign() <= 0) throw NonPositiveDiscriminant("quadratic has no two real roots");
    if (is_perfect_square(D)) throw SquareDiscriminant("rational roots: D = " + D.str());
    Real w = Real::surd(-b, -1, 2 * a, D);
    Real wp = Real::surd(-b, 1, 2 * a, D);
    // Labeling sign(P(inf))*w < sign(P(inf))*w' holds with this orientation
    // for either sign of a.
    return {w, wp};
  }
  certify_in_Fd(P, P.degree() + (P.degree() % 2));
  // Isolate the two real roots by Sturm bisection.
  auto chain = sturm_chain(P);
  Rat B = root_bound(P);
  struct Box {
    Rat lo, hi;
  };
  std::vector<Box> boxes{{-B, B}};
  std::vector<Box> isolated;
  auto count_in = [&](const Rat& lo, const Rat& hi) {
    return variations_at(chain, lo) - variations_at(chain, hi);
  };
  while (!boxes.empty()) {
    Box bx = boxes.back();
    boxes.pop_back();
    int n = count_in(bx.lo, bx.hi);
    if (n == 0) continue;
    if (n == 1) {
      isolated.push_back(bx);
      continue;
    }
    Rat mid = (bx.lo + bx.hi) / 2;
    if (P.eval_rat(mid).is_zero()) throw NotInFd("rational root hit during isolation");
    boxes.push_back({bx.lo, mid});
    boxes.push_back({mid, bx.hi});
  }
  if (isolated.size() != 2) throw NotInFd("root isolation failed");
  // Refine by bisection until the dyadic width certifies `prec` bits.
  auto refine = [&](Box bx) {
    Rat target = Rat(1, pow_int(2, static_cast<unsigned>(prec)));
    int slo = P.eval_rat(bx.lo).sign();
    while (bx.hi - bx.lo > target) {
      Rat mid = (bx.lo + bx.hi) / 2;
      int sm = P.eval_rat(mid).sign();
      if (sm == 0) throw NotInFd("rational root hit during refinement");
      if (sm == slo)
        bx.lo = mid;
      else
        bx.hi = mid;
    }
    Interval lo = Interval::from_rat(bx.lo, prec + 16);
    Interval hi = Interval::from_rat(bx.hi, prec + 16);
    return Real::interval(Interval::from_endpoints_hex(lo.lower_hex(), hi.upper_hex(), prec + 16));
  };
  std::sort(isolated.begin(), isolated.end(), [](const Box& a, const Box& b) { return a.lo < b.lo; });
  Real small_root = refine(isolated[0]);
  Real big_root = refine(isolated[1]);
  if (P.leading().sign() > 0) return {small_root, big_root};
  return {big_root, small_root};
}

QuarticInvariants quartic_invariants(const IntPoly& P) {
  if (P.degree() != 4) throw WrongDegree("quartic invariants need degree exactly 4");
  Int a = P.coeff(4), b = P.coeff(3), c = P.coeff(2), d = P.coeff(1), e = P.coeff(0);
  Int I = 12 * a * e - 3 * b * d + c * c;
  Int J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
  Int numer = 4 * I * I * I - J * J;
  if (numer % 27 != 0) throw DomainError("quartic discriminant not integral");
  return {I, J, numer / 27};
}

}  // namespace qp
