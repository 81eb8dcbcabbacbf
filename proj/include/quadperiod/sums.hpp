#pragma once

#include "quadperiod/cfrac.hpp"
#include "quadperiod/intpoly.hpp"
#include "quadperiod/periods.hpp"
#include "quadperiod/qform.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qp {

enum class Representation {
  direct,                // exact finite enumeration; rational x only
  simple_conditioned,    // simple forms x Gamma(x), floor/infinity conditions
  reduced_conditioned,   // reduced forms x Gamma(x)', Q(g(inf)) < 0
  unconditioned,         // full Gamma(x) orbit sum of the class polynomial
  gamma1_conditioned,    // Gamma1(x) with Q(g(inf)) < 0 < Q(g(x))
  gamma1_unconditioned,  // full Gamma1(x) orbit sum
};

struct LedgerRow {
  long index = 0;  // stream index i
  long shift = 0;  // k of T^{-k} gamma_i rows; 0 for plain stream rows
  QForm base;      // source form
  QForm image;     // base | gamma
  Mat2 gamma = Mat2::identity();
  Real value;  // (base|gamma)(x)^(k-1)
  bool included = false;
};

struct SumResult {
  Real value = Real::integer(0);  // exact when the sum is finite
  bool exact = false;
  long terms = 0;           // included terms
  long steps = 0;           // stream steps consumed
  Rat tail_bound = Rat(0);  // certified bound on the dropped tail
  bool tolerance_met = true;
  bool tail_certified = true;
  std::vector<LedgerRow> ledger;

  // |true value - reported value| bound: interval width plus tail.
  Rat error_bound() const;
  double mid() const { return value.is_interval() ? value.as_interval().mid_double() : value.approx(); }
};

// All forms with discriminant D and Q(inf) < 0 < Q(x); finite, complete.
// Search bound: Q(x) <= D/(4|a|) at the vertex and Q(x) >= 1/q^2 for
// x = p/q force |a| <= D q^2 / 4.
std::vector<QForm> enumerate_positive_at(const Int& D, const Rat& x);

// Exact value of the weight-k sum over Q_D<x> at rational x.
Rat a_sum_direct(const Int& D, int k, const Rat& x);
// Same restricted to one class.
Rat a_sum_direct_class(const FormClass& cls, int k, const Rat& x);

struct SumRequest {
  Int D;
  std::optional<FormClass> cls;  // restrict to one class
  int k = 2;
  Real x;
  Representation representation = Representation::simple_conditioned;
  Rat tol = Rat(1, 100000000);
  long depth = 4096;  // max stream steps
  bool with_ledger = false;
};

// The k-th power sum in the requested representation. Gamma-scope
// representations require even k; gamma1 representations symmetrize with
// the negated class. Exact at rational x; certified interval otherwise.
SumResult a_sum_stream(const SumRequest& req);

struct StarSumResult {
  SumResult conditioned;
  SumResult unconditioned;
};

// A*_{k,B} = A_{k,B} + (-1)^k A_{k,-B} over a Gamma1 class, computed both
// ways in one stream pass.
StarSumResult a_star_sum(const FormClass& B, int k, const Real& x, const Rat& tol, long depth,
                         bool with_ledger = false);

// Orbit sum of P over the matrix family of x at the given even slash
// weight.
SumResult poly_gamma_sum(const IntPoly& P, int weight, const Real& x, Group group, const Rat& tol,
                         long depth);

struct ZagierRow {
  long index = 0;
  QForm form;  // base | gamma_i
  Real value;
  bool cond_infinity = false;  // Q(gamma(inf)) < 0
  bool cond_floor = false;     // Q(floor(gamma(x))) > 0
  bool included = false;
};

struct ZagierList {
  QForm base;  // simple form generating the orbit
  std::vector<ZagierRow> rows;
  Real included_sum;
  Real full_sum;
};

struct ZagierTables {
  std::vector<ZagierList> lists;
  Real total;  // sum of included sums over all lists
};

// Per-simple-form orbit tables of (form, value, inclusion) rows; the
// included rows partition Q_D<x>.
ZagierTables zagier_lists(const Int& D, const Real& x, long depth);

struct BijectionAudit {
  bool pass = true;
  long pairs = 0;        // condition-passing pairs on the left
  long target_size = 0;  // |class<x>|
  std::string failure;   // first counterexample, when pass = false
};

// Exhaustive set-equality audits at rational x (where class<x> is finite):
// simple x Gamma(x) with the floor condition, reduced x Gamma(x)' with the
// infinity condition, and simple x Gamma1(x) with the value condition.
BijectionAudit audit_simple_gamma(const FormClass& A, const Rat& x);
BijectionAudit audit_reduced_gamma_prime(const FormClass& A, const Rat& x);
BijectionAudit audit_simple_gamma1(const FormClass& B, const Rat& x);

struct QuarticAudit {
  bool pass = true;
  long pairs = 0;
  std::string failure;
};

// Well-definedness spot check in degree 4: sampled orbit polynomials of P0
// that pass each map's conditions must land in {R(inf) < 0 < R(x)}.
QuarticAudit audit_quartic_well_defined(const IntPoly& P0, const Rat& x, int orbit_samples,
                                        std::uint64_t seed);

struct IdentityReport {
  struct Item {
    std::string identity;
    std::string sample;
    Rat residual_bound;
    bool pass = true;
  };
  std::vector<Item> items;
  bool pass = true;
};

// Functional equations of the orbit sum F(x) = sum over Gamma(x) of
// (P|g)(x) under the generators T, sigma, eps, and the S-corollary for
// even cocycle polynomials. Rational samples are checked exactly.
IdentityReport audit_gamma_sum_identities(const IntPoly& P, int weight,
                                          const std::vector<Real>& samples, const Rat& tol,
                                          long depth);

}  // namespace qp
