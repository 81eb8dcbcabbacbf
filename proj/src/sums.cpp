#include "quadperiod/sums.hpp"

#include "quadperiod/errors.hpp"
#include "quadperiod/lseries.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace qp {

namespace {

// Tail of sum_{j>=i} delta_j^d for the positive continued fraction: deltas
// halve every two steps, so the tail is below 4 delta_i^d for d >= 2.
Rat plus_tail_bound(const Rat& coeff, const Rat& delta_ub, int d) {
  return 4 * coeff * pow_rat(delta_ub, static_cast<unsigned>(d));
}

Rat form_bound_coeff(const std::vector<QForm>& forms, int k) {
  Rat c = 0;
  for (const auto& q : forms) c += Rat(pow_int(q.coeff_norm(), static_cast<unsigned>(k - 1)), 1);
  return c;
}

struct Accumulator {
  Real value = Real::integer(0);
  long terms = 0;
  void add(const Real& v) {
    value = value + v;
    ++terms;
  }
};

std::vector<QForm> scope_simple(const SumRequest& req, Group group) {
  if (req.cls) return req.cls->simple_cycle;
  std::vector<QForm> all;
  for (const auto& cls : class_decomposition(req.D, group))
    all.insert(all.end(), cls.simple_cycle.begin(), cls.simple_cycle.end());
  return all;
}

std::vector<QForm> scope_reduced(const SumRequest& req, Group group) {
  if (req.cls) return req.cls->reduced_cycle;
  std::vector<QForm> all;
  for (const auto& cls : class_decomposition(req.D, group))
    all.insert(all.end(), cls.reduced_cycle.begin(), cls.reduced_cycle.end());
  return all;
}

bool cond_floor_pass(const QForm& Q, const std::optional<Int>& digit) {
  if (!digit) return Q.a.sign() > 0;  // floor(gamma(x)) = infinity
  return Q.eval_int(*digit).sign() > 0;
}

int sign_at_state(const QForm& Q, const std::optional<Real>& state) {
  if (!state) return Q.a.sign();
  return Q.eval(*state).sign();
}

SumResult sum_simple_conditioned(const std::vector<QForm>& forms, const SumRequest& req) {
  SumResult res;
  Rat coeff = form_bound_coeff(forms, req.k);
  PlusStream stream(req.x);
  auto prev = stream.next();  // index 0; gamma_0 is not part of the family
  if (!prev) return res;
  Real delta_prev = prev->delta;
  while (true) {
    auto st = stream.next();
    if (!st) {
      res.exact = true;
      break;
    }
    ++res.steps;
    auto ginf = mobius_infinity(st->gamma);
    for (const auto& Q : forms) {
      bool ci = Q.sign_at(ginf) < 0;
      bool cf = cond_floor_pass(Q, st->digit);
      bool inc = ci && cf;
      if (inc || req.with_ledger) {
        Real v = pow_real(Q.eval_pair(delta_prev, st->delta), static_cast<unsigned>(req.k - 1));
        if (inc) res.value = res.value + v, ++res.terms;
        if (req.with_ledger)
          res.ledger.push_back({st->index, 0, Q, act(Q, st->gamma), st->gamma, v, inc});
      }
    }
    if (!st->digit) {  // closing step of a rational input
      res.exact = true;
      break;
    }
    delta_prev = st->delta;
    if (!req.x.is_rational()) {
      res.tail_bound = plus_tail_bound(coeff, rat_upper(st->delta), 2 * req.k - 2);
      if (res.tail_bound < req.tol) break;
      if (res.steps >= req.depth) {
        res.tolerance_met = false;
        break;
      }
    }
  }
  if (res.exact) res.tail_bound = 0;
  return res;
}

SumResult sum_reduced_conditioned(const std::vector<QForm>& reduced,
                                  const std::vector<QForm>& simple_for_bound,
                                  const SumRequest& req) {
  SumResult res;
  // Blocks T^{-shift} gamma_i correspond index-by-index to the simple
  // representation, so its tail bound certifies block boundaries here.
  Rat coeff = form_bound_coeff(simple_for_bound, req.k);
  PlusStream stream(req.x);
  auto prev = stream.next();
  if (!prev) return res;
  Real delta_prev = prev->delta;
  while (true) {
    auto st = stream.next();
    if (!st) {
      res.exact = true;
      break;
    }
    ++res.steps;
    Rat ginf_i = *mobius_infinity(st->gamma);
    if (st->digit) {
      Real X = delta_prev;
      for (Int shift = 1; shift <= *st->digit; ++shift) {
        X = X - st->delta;
        Rat ginf = ginf_i - Rat(shift, 1);
        long shift_l = shift.convert_to<long>();
        for (const auto& Q : reduced) {
          bool inc = Q.eval_rat(ginf).sign() < 0;
          if (inc || req.with_ledger) {
            Real v = pow_real(Q.eval_pair(X, st->delta), static_cast<unsigned>(req.k - 1));
            if (inc) res.value = res.value + v, ++res.terms;
            if (req.with_ledger) {
              Mat2 g = Mat2::T_pow(-shift) * st->gamma;
              res.ledger.push_back({st->index, shift_l, Q, act(Q, g), g, v, true});
            }
          }
        }
      }
    } else {
      // Closing block of a rational input: the state is infinite, the
      // shifted matrices keep value Q(delta, 0), and the condition
      // Q(ginf - shift) < 0 holds exactly for the integers strictly
      // between ginf - w' and ginf - w.
      for (const auto& Q : reduced) {
        auto [w, wp] = form_roots(Q);
        Real lo = Real::rational(ginf_i) - wp;  // shift > lo
        Real hi = Real::rational(ginf_i) - w;   // shift < hi
        Int first = lo.floor() + 1;
        Int last = hi.ceil() - 1;
        if (first < 1) first = 1;
        if (last < first) continue;
        Int count = last - first + 1;
        Real v = pow_real(Q.eval_pair(delta_prev, Real::integer(0)),
                          static_cast<unsigned>(req.k - 1));
        res.value = res.value + v * Real::integer(count);
        res.terms += count.convert_to<long>();
        if (req.with_ledger) {
          for (Int shift = first; shift <= last; ++shift) {
            Mat2 g = Mat2::T_pow(-shift) * st->gamma;
            res.ledger.push_back({st->index, shift.convert_to<long>(), Q, act(Q, g), g, v, true});
          }
        }
      }
      res.exact = true;
      break;
    }
    delta_prev = st->delta;
    if (!req.x.is_rational()) {
      res.tail_bound = plus_tail_bound(coeff, rat_upper(st->delta), 2 * req.k - 2);
      if (res.tail_bound < req.tol) break;
      if (res.steps >= req.depth) {
        res.tolerance_met = false;
        break;
      }
    }
  }
  if (res.exact) res.tail_bound = 0;
  return res;
}

SumResult poly_plus_sum(const IntPoly& P, int weight, const Real& x, const Rat& tol, long depth) {
  SumResult res;
  Rat coeff(P.coeff_norm(), 1);
  PlusStream stream(x);
  auto prev = stream.next();
  if (!prev) return res;
  Real delta_prev = prev->delta;
  while (true) {
    auto st = stream.next();
    if (!st) {
      res.exact = true;
      break;
    }
    ++res.steps;
    Real zero = Real::integer(0);
    const Real& dlt = st->digit ? st->delta : zero;
    res.value = res.value + P.eval_homogeneous(delta_prev, dlt, weight);
    ++res.terms;
    if (!st->digit) {
      res.exact = true;
      break;
    }
    delta_prev = st->delta;
    if (!x.is_rational()) {
      res.tail_bound = plus_tail_bound(coeff, rat_upper(st->delta), weight);
      if (res.tail_bound < tol) break;
      if (res.steps >= depth) {
        res.tolerance_met = false;
        break;
      }
    }
  }
  if (res.exact) res.tail_bound = 0;
  return res;
}

// Quotient G with P(X) = (X-1) G(X) + P(1); integral.
IntPoly shifted_quotient(const IntPoly& P) {
  int d = P.degree();
  if (d < 1) return IntPoly();
  std::vector<Int> g(d, Int(0));
  Int carry = 0;
  for (int j = d; j >= 1; --j) {
    carry += P.coeff(j);
    g[j - 1] = carry;
  }
  return IntPoly(std::move(g));
}

// Certified tail for the negative-continued-fraction orbit sum of P at
// weight d: with P(1) = 0, P factors through (X - Y) in homogeneous form
// and |P(delta_{j-1}, delta_j)| <= |G| delta_N^{d-1} (delta_{j-1}-delta_j),
// which telescopes to |G| delta_N^d.
struct MinusTail {
  Rat certified_coeff;    // |G| when P(1) = 0
  Rat uncertified_const;  // |P(1)|; needs the run-length estimate
  bool certified() const { return uncertified_const.is_zero(); }
};

MinusTail minus_tail_data(const IntPoly& P) {
  MinusTail t;
  Rat p1(P.eval_int(1), 1);
  IntPoly G = shifted_quotient(P);
  t.certified_coeff = Rat(G.coeff_norm(), 1);
  t.uncertified_const = abs(p1);
  return t;
}

SumResult poly_minus_sum(const IntPoly& P, int weight, const Real& x, const Rat& tol, long depth,
                         const Rat& telescope_bound) {
  // telescope_bound, when nonzero, is a proven bound on |orbit sum of P at
  // any argument|; the remainder after step N is then bounded by
  // telescope_bound * delta_N^weight.
  SumResult res;
  MinusTail tail = minus_tail_data(P);
  MinusStream stream(x);
  auto prev = stream.next();
  if (!prev) return res;
  Real delta_prev = prev->delta;
  Rat prev_delta_ub = 1;
  while (true) {
    auto st = stream.next();
    if (!st) {
      res.exact = true;
      break;
    }
    ++res.steps;
    Real zero = Real::integer(0);
    const Real& dlt = st->digit ? st->delta : zero;
    res.value = res.value + P.eval_homogeneous(delta_prev, dlt, weight);
    ++res.terms;
    if (!st->digit) {
      res.exact = true;
      break;
    }
    if (!x.is_rational()) {
      Rat dub = rat_upper(st->delta);
      Rat dpow = pow_rat(dub, static_cast<unsigned>(weight));
      if (!telescope_bound.is_zero()) {
        res.tail_bound = telescope_bound * dpow;
      } else {
        res.tail_bound = tail.certified_coeff * dpow;
        if (!tail.certified()) {
          // All-2 continuation estimate for the non-vanishing part.
          Rat gap = prev_delta_ub - dub;
          Rat runs = gap.sign() > 0 ? dub / gap + 1 : Rat(depth, 1);
          res.tail_bound += tail.uncertified_const * dpow * runs;
          res.tail_certified = false;
        }
      }
      if (res.tail_bound < tol) break;
      if (res.steps >= depth) {
        res.tolerance_met = false;
        break;
      }
      prev_delta_ub = dub;
    }
    delta_prev = st->delta;
  }
  if (res.exact) res.tail_bound = 0;
  return res;
}

// Uniform bound on the full-discriminant sum at any argument: every term
// obeys 0 < Q(y) <= D/4, so the weight-k sum is below (D/4)^(k-2) times the
// constant weight-2 value.
Rat disc_sum_bound(const Int& D, int k) {
  Rat alpha = Rat(-5, 1) * l_value(D, -1);
  return pow_rat(Rat(D, 4), static_cast<unsigned>(k - 2)) * alpha;
}

struct Gamma1Engines {
  SumResult conditioned;
  SumResult unconditioned;
};

Gamma1Engines gamma1_star_engines(const FormClass& B, int k, const Real& x, const Rat& tol,
                                  long depth, bool with_ledger) {
  Gamma1Engines out;
  const std::vector<QForm> pos = B.simple_cycle;
  const std::vector<QForm> neg = negated_class_simple_forms(B);
  bool neg_plus = k % 2 == 0;
  Int D = B.representative.disc();
  IntPoly P = gamma1_period_polynomial(B, k);
  int weight = 2 * k - 2;
  // Orbit-sum remainder after step N is delta_N^(2k-2) times the sum value
  // at the step's state, bounded by twice the full-discriminant constant.
  Rat telescope = 2 * disc_sum_bound(D, k);

  SumResult& cond = out.conditioned;
  SumResult& uncond = out.unconditioned;
  MinusStream stream(x);
  auto prev = stream.next();
  if (!prev) return out;
  Real delta_prev = prev->delta;
  while (true) {
    auto st = stream.next();
    if (!st) {
      cond.exact = uncond.exact = true;
      break;
    }
    ++cond.steps;
    ++uncond.steps;
    auto ginf = mobius_infinity(st->gamma);
    Real zero = Real::integer(0);
    const Real& dlt = st->digit ? st->delta : zero;

    uncond.value = uncond.value + P.eval_homogeneous(delta_prev, dlt, weight);
    ++uncond.terms;

    auto handle = [&](const std::vector<QForm>& forms, bool positive_sign) {
      for (const auto& Q : forms) {
        bool ci = Q.sign_at(ginf) < 0;
        bool cv = ci && sign_at_state(Q, st->state) > 0;
        bool inc = ci && cv;
        if (inc || with_ledger) {
          Real v = pow_real(Q.eval_pair(delta_prev, dlt), static_cast<unsigned>(k - 1));
          if (!positive_sign) v = -v;
          if (inc) cond.value = cond.value + v, ++cond.terms;
          if (with_ledger)
            cond.ledger.push_back({st->index, 0, Q, act(Q, st->gamma), st->gamma, v, inc});
        }
      }
    };
    handle(pos, true);
    handle(neg, neg_plus);

    if (!st->digit) {
      cond.exact = uncond.exact = true;
      break;
    }
    delta_prev = st->delta;
    if (!x.is_rational()) {
      Rat dpow = pow_rat(rat_upper(st->delta), static_cast<unsigned>(weight));
      uncond.tail_bound = telescope * dpow;
      // |A* - cond_N| <= |A* - uncond_N| + |uncond_N - cond_N|.
      Rat gap = rat_abs_upper(uncond.value - cond.value);
      cond.tail_bound = uncond.tail_bound + gap;
      if (uncond.tail_bound < tol && cond.tail_bound < tol) break;
      if (cond.steps >= depth) {
        cond.tolerance_met = uncond.tolerance_met = false;
        break;
      }
    }
  }
  if (cond.exact) {
    cond.tail_bound = 0;
    uncond.tail_bound = 0;
  }
  return out;
}

}  // namespace

Rat SumResult::error_bound() const {
  Rat width = 0;
  if (value.is_interval()) width = value.as_interval().width();
  return width + tail_bound;
}

std::vector<QForm> enumerate_positive_at(const Int& D, const Rat& x) {
  require_valid_discriminant(D);
  Int p = num(x), q = den(x);
  std::vector<QForm> out;
  Int amax = D * q * q / 4;
  Int s = isqrt(D * q * q);  // strict: (2ap+bq)^2 < D q^2 <=> |2ap+bq| <= s
  for (Int a = -1; a >= -amax; --a) {
    Int n0 = 2 * a * p;
    // b range: -s <= 2ap + bq <= s
    Int blo = ceil_rat(Rat(-s - n0, q));
    Int bhi = floor_rat(Rat(s - n0, q));
    for (Int b = blo; b <= bhi; ++b) {
      Int num_c = b * b - D;
      if (num_c % (4 * a) != 0) continue;
      QForm Q{a, b, num_c / (4 * a)};
      out.push_back(Q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat a_sum_direct(const Int& D, int k, const Rat& x) {
  if (k < 2) throw DomainError("weight parameter k must be >= 2");
  Rat total = 0;
  for (const auto& Q : enumerate_positive_at(D, x))
    total += pow_rat(Q.eval_rat(x), static_cast<unsigned>(k - 1));
  return total;
}

Rat a_sum_direct_class(const FormClass& cls, int k, const Rat& x) {
  if (k < 2) throw DomainError("weight parameter k must be >= 2");
  Int D = cls.representative.disc();
  Rat total = 0;
  for (const auto& Q : enumerate_positive_at(D, x)) {
    auto [simple, g] = reduce_to_simple(Q);
    bool mine = cls.contains_simple(simple);
    if (!mine && cls.group == Group::gamma) mine = cls.contains_simple(simple.sigma_conjugate());
    if (mine) total += pow_rat(Q.eval_rat(x), static_cast<unsigned>(k - 1));
  }
  return total;
}

SumResult a_sum_stream(const SumRequest& req) {
  if (req.k < 2) throw DomainError("weight parameter k must be >= 2");
  if (req.depth < 1) throw DomainError("depth must be >= 1");
  if (req.tol.sign() <= 0) throw DomainError("tolerance must be positive");
  switch (req.representation) {
    case Representation::direct: {
      if (!req.x.is_rational())
        throw DomainError("direct representation is finite only at rational x");
      SumResult res;
      res.value = Real::rational(req.cls ? a_sum_direct_class(*req.cls, req.k, req.x.as_rational())
                                         : a_sum_direct(req.D, req.k, req.x.as_rational()));
      res.exact = true;
      return res;
    }
    case Representation::simple_conditioned: {
      if (req.k % 2 != 0) throw DomainError("Gamma-scope sums need even k");
      return sum_simple_conditioned(scope_simple(req, Group::gamma), req);
    }
    case Representation::reduced_conditioned: {
      if (req.k % 2 != 0) throw DomainError("Gamma-scope sums need even k");
      return sum_reduced_conditioned(scope_reduced(req, Group::gamma),
                                     scope_simple(req, Group::gamma), req);
    }
    case Representation::unconditioned: {
      if (req.k % 2 != 0) throw DomainError("unconditioned Gamma sums need even k");
      IntPoly P;
      if (req.cls)
        P = class_period_polynomial(*req.cls, req.k);
      else
        P = disc_period_polynomial(req.D, req.k);
      return poly_plus_sum(P, 2 * req.k - 2, req.x, req.tol, req.depth);
    }
    case Representation::gamma1_conditioned:
    case Representation::gamma1_unconditioned: {
      FormClass B;
      if (req.cls) {
        B = *req.cls;
      } else {
        throw DomainError("gamma1 representations need an explicit class");
      }
      auto both = a_star_sum(B, req.k, req.x, req.tol, req.depth, req.with_ledger);
      return req.representation == Representation::gamma1_conditioned ? both.conditioned
                                                                      : both.unconditioned;
    }
  }
  throw DomainError("unknown representation");
}

StarSumResult a_star_sum(const FormClass& B, int k, const Real& x, const Rat& tol, long depth,
                         bool with_ledger) {
  if (k < 2) throw DomainError("weight parameter k must be >= 2");
  if (B.group != Group::gamma1) throw DomainError("star sums take Gamma1 classes");
  auto engines = gamma1_star_engines(B, k, x, tol, depth, with_ledger);
  return {std::move(engines.conditioned), std::move(engines.unconditioned)};
}

SumResult poly_gamma_sum(const IntPoly& P, int weight, const Real& x, Group group, const Rat& tol,
                         long depth) {
  if (weight % 2 != 0 || weight < 2) throw WrongDegree("slash weight must be even and >= 2");
  if (P.degree() > weight) throw WrongDegree("degree exceeds slash weight");
  if (group == Group::gamma) return poly_plus_sum(P, weight, x, tol, depth);
  return poly_minus_sum(P, weight, x, tol, depth, Rat(0));
}

ZagierTables zagier_lists(const Int& D, const Real& x, long depth) {
  require_valid_discriminant(D);
  if (depth < 1) throw DomainError("depth must be >= 1");
  ZagierTables tables;
  tables.total = Real::integer(0);
  std::vector<QForm> simples = enumerate_forms(D, FormKind::simple);
  std::sort(simples.begin(), simples.end(), [](const QForm& a, const QForm& b) { return b < a; });
  for (const auto& base : simples) {
    ZagierList list;
    list.base = base;
    list.included_sum = Real::integer(0);
    list.full_sum = Real::integer(0);
    PlusStream stream(x);
    auto prev = stream.next();
    if (!prev) continue;
    Real delta_prev = prev->delta;
    for (long i = 0; i < depth; ++i) {
      auto st = stream.next();
      if (!st) break;
      auto ginf = mobius_infinity(st->gamma);
      ZagierRow row;
      row.index = st->index;
      row.form = act(base, st->gamma);
      Real zero = Real::integer(0);
      const Real& dlt = st->digit ? st->delta : zero;
      row.value = base.eval_pair(delta_prev, dlt);
      row.cond_infinity = base.sign_at(ginf) < 0;
      row.cond_floor = cond_floor_pass(base, st->digit);
      row.included = row.cond_infinity && row.cond_floor;
      list.full_sum = list.full_sum + row.value;
      if (row.included) list.included_sum = list.included_sum + row.value;
      list.rows.push_back(std::move(row));
      if (!st->digit) break;
      delta_prev = st->delta;
    }
    tables.total = tables.total + list.included_sum;
    tables.lists.push_back(std::move(list));
  }
  return tables;
}

namespace {

using FormCount = std::map<QForm, int>;

BijectionAudit finish_audit(const FormCount& images, const FormCount& target, long pairs,
                            const char* what) {
  BijectionAudit audit;
  audit.pairs = pairs;
  for (const auto& [q, n] : target) audit.target_size += n;
  for (const auto& [q, n] : images) {
    auto it = target.find(q);
    int want = it == target.end() ? 0 : it->second;
    if (n != want) {
      audit.pass = false;
      std::ostringstream os;
      os << what << ": image " << q.str() << " multiplicity " << n << ", target " << want;
      audit.failure = os.str();
      return audit;
    }
  }
  for (const auto& [q, n] : target) {
    if (images.find(q) == images.end()) {
      audit.pass = false;
      audit.failure = std::string(what) + ": missing image " + q.str();
      return audit;
    }
  }
  return audit;
}

FormCount class_target(const FormClass& cls, const Rat& x) {
  FormCount target;
  Int D = cls.representative.disc();
  for (const auto& Q : enumerate_positive_at(D, x)) {
    auto [simple, g] = reduce_to_simple(Q);
    bool mine = cls.contains_simple(simple);
    if (!mine && cls.group == Group::gamma) mine = cls.contains_simple(simple.sigma_conjugate());
    if (mine) target[Q]++;
  }
  return target;
}

}  // namespace

BijectionAudit audit_simple_gamma(const FormClass& A, const Rat& x) {
  FormCount target = class_target(A, x);
  FormCount images;
  long pairs = 0;
  PlusStream stream(Real::rational(x));
  stream.next();
  while (auto st = stream.next()) {
    auto ginf = mobius_infinity(st->gamma);
    for (const auto& Q : A.simple_cycle) {
      if (Q.sign_at(ginf) < 0 && cond_floor_pass(Q, st->digit)) {
        images[act(Q, st->gamma)]++;
        ++pairs;
      }
    }
  }
  return finish_audit(images, target, pairs, "simple x Gamma(x)");
}

BijectionAudit audit_reduced_gamma_prime(const FormClass& A, const Rat& x) {
  FormCount target = class_target(A, x);
  FormCount images;
  long pairs = 0;
  PlusStream stream(Real::rational(x));
  stream.next();
  while (auto st = stream.next()) {
    Rat ginf_i = *mobius_infinity(st->gamma);
    if (st->digit) {
      for (Int shift = 1; shift <= *st->digit; ++shift) {
        Rat ginf = ginf_i - Rat(shift, 1);
        for (const auto& Q : A.reduced_cycle) {
          if (Q.eval_rat(ginf).sign() < 0) {
            images[act(Q, Mat2::T_pow(-shift) * st->gamma)]++;
            ++pairs;
          }
        }
      }
    } else {
      for (const auto& Q : A.reduced_cycle) {
        auto [w, wp] = form_roots(Q);
        Real lo = Real::rational(ginf_i) - wp;
        Real hi = Real::rational(ginf_i) - w;
        Int first = lo.floor() + 1;
        Int last = hi.ceil() - 1;
        if (first < 1) first = 1;
        for (Int shift = first; shift <= last; ++shift) {
          images[act(Q, Mat2::T_pow(-shift) * st->gamma)]++;
          ++pairs;
        }
      }
    }
  }
  return finish_audit(images, target, pairs, "reduced x Gamma(x)'");
}

BijectionAudit audit_simple_gamma1(const FormClass& B, const Rat& x) {
  if (B.group != Group::gamma1) throw DomainError("audit needs a Gamma1 class");
  FormCount target = class_target(B, x);
  FormCount images;
  long pairs = 0;
  MinusStream stream(Real::rational(x));
  stream.next();
  while (auto st = stream.next()) {
    auto ginf = mobius_infinity(st->gamma);
    for (const auto& Q : B.simple_cycle) {
      if (Q.sign_at(ginf) < 0 && sign_at_state(Q, st->state) > 0) {
        images[act(Q, st->gamma)]++;
        ++pairs;
      }
    }
  }
  return finish_audit(images, target, pairs, "simple x Gamma1(x)");
}

QuarticAudit audit_quartic_well_defined(const IntPoly& P0, const Rat& x, int orbit_samples,
                                        std::uint64_t seed) {
  QuarticAudit audit;
  certify_in_Fd(P0, 4);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> word_len(0, 6), letter(0, 3);
  std::vector<IntPoly> samples{P0};
  for (int i = 0; i < orbit_samples; ++i) {
    Mat2 g = Mat2::identity();
    int len = word_len(rng);
    for (int j = 0; j < len; ++j) {
      switch (letter(rng)) {
        case 0: g = g * Mat2::T(); break;
        case 1: g = g * Mat2::T().inverse(); break;
        case 2: g = g * Mat2::S(); break;
        default: g = g * Mat2::eps(); break;
      }
    }
    samples.push_back(slash(P0, g, 4));
  }

  auto in_target = [&](const IntPoly& R) {
    return R.leading().sign() < 0 && R.eval_rat(x).sign() > 0;
  };
  auto record_failure = [&](const char* map, const IntPoly& P, const Mat2& g) {
    audit.pass = false;
    audit.failure = std::string(map) + ": image of " + P.str() + " under " + g.str() +
                    " left the target set";
  };

  for (const auto& P : samples) {
    bool simple_kind = P.eval_rat(Rat(0)).sign() < 0 && P.leading().sign() > 0;
    bool reduced_kind = P.leading().sign() > 0 && P.eval_rat(Rat(-1)).sign() < 0 &&
                        P.eval_rat(Rat(0)).sign() > 0;
    PlusStream stream(Real::rational(x));
    stream.next();
    while (auto st = stream.next()) {
      auto ginf = mobius_infinity(st->gamma);
      auto sign_inf = [&](const IntPoly& R) {
        return ginf ? R.eval_rat(*ginf).sign() : R.leading().sign();
      };
      if (simple_kind) {
        bool ci = sign_inf(P) < 0;
        bool cf = st->digit ? P.eval_rat(Rat(*st->digit, 1)).sign() > 0 : P.leading().sign() > 0;
        if (ci && cf) {
          ++audit.pairs;
          IntPoly R = slash(P, st->gamma, 4);
          if (!in_target(R)) {
            record_failure("simple x Gamma(x)", P, st->gamma);
            return audit;
          }
        }
      }
      if (reduced_kind && st->digit) {
        Rat g0 = *mobius_infinity(st->gamma);
        for (Int shift = 1; shift <= *st->digit; ++shift) {
          if (P.eval_rat(g0 - Rat(shift, 1)).sign() < 0) {
            ++audit.pairs;
            Mat2 g = Mat2::T_pow(-shift) * st->gamma;
            IntPoly R = slash(P, g, 4);
            if (!in_target(R)) {
              record_failure("reduced x Gamma(x)'", P, g);
              return audit;
            }
          }
        }
      }
    }
    if (simple_kind) {
      MinusStream mstream(Real::rational(x));
      mstream.next();
      while (auto st = mstream.next()) {
        auto ginf = mobius_infinity(st->gamma);
        bool ci = (ginf ? P.eval_rat(*ginf).sign() : P.leading().sign()) < 0;
        bool cv;
        if (st->state)
          cv = P.eval_rat(st->state->as_rational()).sign() > 0;
        else
          cv = P.leading().sign() > 0;
        if (ci && cv) {
          ++audit.pairs;
          IntPoly R = slash(P, st->gamma, 4);
          if (!in_target(R)) {
            record_failure("simple x Gamma1(x)", P, st->gamma);
            return audit;
          }
        }
      }
    }
  }
  return audit;
}

namespace {

struct PgEval {
  Real value;
  Rat bound;
};

PgEval eval_pg(const IntPoly& P, int weight, const Real& y, const Rat& tol, long depth) {
  SumResult r = poly_plus_sum(P, weight, y, tol, depth);
  return {r.value, r.error_bound()};
}

// |v| <= b certified?
bool residual_within(const Real& v, const Rat& extra, const Rat& tol) {
  return rat_abs_upper(v) + extra <= tol;
}

std::string describe_sample(const Real& x) { return x.is_exact() ? x.str() : x.decimal(20); }

}  // namespace

IdentityReport audit_gamma_sum_identities(const IntPoly& P, int weight,
                                          const std::vector<Real>& samples, const Rat& tol,
                                          long depth) {
  IdentityReport report;
  Rat sub_tol = tol / 8;
  const Mat2& eps = Mat2::eps();
  const Mat2& sig = Mat2::sigma();
  const Mat2& U = Mat2::U();
  IntPoly P1 = P + slash(P, eps, weight);
  IntPoly P2 = slash(P, eps, weight) + slash(P, U * eps, weight) -
               slash(P, Mat2::S() * U * U * eps, weight);
  bool in_wplus = cocycle_check(P, weight).pass && P.is_even_poly();

  auto add_item = [&](const std::string& id, const Real& x, const Real& residual,
                      const Rat& extra) {
    IdentityReport::Item item;
    item.identity = id;
    item.sample = describe_sample(x);
    item.residual_bound = rat_abs_upper(residual) + extra;
    item.pass = residual_within(residual, extra, tol);
    if (!item.pass) report.pass = false;
    report.items.push_back(std::move(item));
  };

  for (const Real& x : samples) {
    // (T) periodicity: F(x) - F(x+1) = 0.
    {
      PgEval a = eval_pg(P, weight, x, sub_tol, depth);
      PgEval b = eval_pg(P, weight, x + Real::integer(1), sub_tol, depth);
      add_item("T-periodicity", x, a.value - b.value, a.bound + b.bound);
    }
    // (sigma) F(x) - F(-x) = piecewise combination of P1, P2.
    {
      Int m = x.floor();
      Real frac = x - Real::integer(m);
      if (frac.sign() != 0 && (frac - Real::rational(Rat(1, 2))).sign() != 0) {
        PgEval a = eval_pg(P, weight, x, sub_tol, depth);
        PgEval b = eval_pg(P, weight, -x, sub_tol, depth);
        bool first_half = (frac - Real::rational(Rat(1, 2))).sign() < 0;
        IntPoly rhs_poly;
        if (first_half) {
          rhs_poly = slash(P2, Mat2::T_pow(-m), weight) - slash(P1, Mat2::T_pow(m + 1) * sig, weight);
        } else {
          rhs_poly = slash(P1, Mat2::T_pow(-m), weight) - slash(P2, Mat2::T_pow(m + 1) * sig, weight);
        }
        Real residual = a.value - b.value - rhs_poly.eval(x);
        add_item("sigma-reflection", x, residual, a.bound + b.bound);
      }
    }
    // (eps) for x > 0, x != 1: F(x) - x^w F(1/x) = chi_(0,1) P1(x) - P(x).
    if (x.sign() > 0 && x.cmp_int(1) != 0) {
      PgEval a = eval_pg(P, weight, x, sub_tol, depth);
      PgEval b = eval_pg(P, weight, x.reciprocal(), sub_tol, depth);
      Real xw = pow_real(x, static_cast<unsigned>(weight));
      Real rhs = Real::integer(0) - P.eval(x);
      if (x.cmp_int(1) < 0) rhs = rhs + P1.eval(x);
      Real residual = a.value - xw * b.value - rhs;
      add_item("eps-inversion", x, residual, a.bound + rat_abs_upper(xw) * b.bound);
    }
    // (S) for even cocycle polynomials: F(x) - x^w F(-1/x) = -P(x).
    if (in_wplus && x.sign() != 0) {
      PgEval a = eval_pg(P, weight, x, sub_tol, depth);
      PgEval b = eval_pg(P, weight, -(x.reciprocal()), sub_tol, depth);
      Real xw = pow_real(x, static_cast<unsigned>(weight));
      Real residual = a.value - xw * b.value + P.eval(x);
      add_item("S-corollary", x, residual, a.bound + rat_abs_upper(xw) * b.bound);
    }
  }
  return report;
}

}  // namespace qp
