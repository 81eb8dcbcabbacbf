#pragma once

#include "quadperiod/mat2.hpp"
#include "quadperiod/numeric.hpp"
#include "quadperiod/real.hpp"

#include <optional>
#include <vector>

namespace qp {

// One step of the positive continued fraction x_{i+1} = 1/(x_i - n_i).
// Step i carries gamma_i (gamma_i(x) = x_i), the previous convergent
// (p_{i-1}, q_{i-1}) and delta_i = (-1)^i (p_{i-1} - q_{i-1} x). For
// rational x the stream ends with a closing step whose state is infinity
// (digit empty, delta 0).
struct PlusStep {
  long index = 0;
  std::optional<Int> digit;   // n_i; empty on the closing step
  std::optional<Real> state;  // x_i; empty means infinity
  Mat2 gamma = Mat2::identity();
  Int p_prev, q_prev;  // p_{i-1}, q_{i-1}
  Real delta;          // delta_i >= 0
};

class PlusStream {
 public:
  explicit PlusStream(Real x);
  // Emits the next step, or nothing after the closing step of a rational
  // input. Throws InsufficientPrecision when an interval state straddles
  // an integer.
  std::optional<PlusStep> next();

 private:
  Real x_;
  bool exact_;
  long index_ = 0;
  bool done_ = false;
  bool final_pending_ = false;
  std::optional<Real> state_;
  Mat2 gamma_ = Mat2::identity();
  Int p_prev_ = 1, p_prev2_ = 0;  // p_{i-1}, p_{i-2}
  Int q_prev_ = 0, q_prev2_ = 1;
  Real delta_ = Real::integer(1);
};

// Negative continued fraction x_{i+1} = 1/(m_i - x_i) with m_i = ceil(x_i)
// for non-integer states; an integer state emits its own value and the
// stream closes with delta = 0. gamma_tilde has determinant +1.
//
// `paper_literal` switches the digit rule to m_i = ceil(x_i) + 1 as a
// diagnostic; the monotone-delta and m_i >= 2 guarantees are void there.
struct MinusStep {
  long index = 0;
  std::optional<Int> digit;   // m_i
  std::optional<Real> state;  // x_i; empty means infinity
  Mat2 gamma = Mat2::identity();
  Int p_prev, q_prev;  // ptilde_{i-1}, qtilde_{i-1}
  Real delta;          // deltatilde_i >= 0
};

class MinusStream {
 public:
  explicit MinusStream(Real x, bool paper_literal = false);
  std::optional<MinusStep> next();

 private:
  Real x_;
  bool exact_;
  bool literal_;
  long index_ = 0;
  bool done_ = false;
  bool final_pending_ = false;
  std::optional<Real> state_;
  Mat2 gamma_ = Mat2::identity();
  Int p_prev_ = 1, p_prev2_ = 0;
  Int q_prev_ = 0, q_prev2_ = -1;
  Real delta_ = Real::integer(1);
};

enum class SlowKind {
  plus,    // x<=0: T | 0<x<=1: 1/x - 1 | x>1: x-1
  simple,  // x<=0: T | 0<x<1: x/(1-x) | x>=1: x-1
};

enum class SlowBranch { shift_up, flip, shift_down };

struct SlowStep {
  long index = 0;       // i >= 1
  SlowBranch branch;    // branch taken from x_{i-1} to x_i
  Real state;           // x_i
  Mat2 gamma = Mat2::identity();  // accumulated matrix, gamma(x) = x_i
};

struct SlowCycle {
  long start_index = 0;  // first index whose state repeats
  long length = 0;
};

class SlowStream {
 public:
  SlowStream(Real x, SlowKind kind);
  // Stops (returns nothing) after reaching state 0 on exact input, or when
  // an exact state repeats (cycle closure, simple kind).
  std::optional<SlowStep> next();

  bool terminated_at_zero() const { return hit_zero_; }
  const std::optional<SlowCycle>& cycle() const { return cycle_; }
  bool cycle_detection_available() const { return exact_; }

 private:
  SlowKind kind_;
  bool exact_;
  long index_ = 0;
  bool done_ = false;
  bool hit_zero_ = false;
  std::optional<SlowCycle> cycle_;
  Real state_;
  Mat2 gamma_ = Mat2::identity();
  std::vector<std::pair<Real, long>> seen_;  // exact states, emission index
};

// Collectors matching the per-operation contracts.
std::vector<PlusStep> plus_cf(const Real& x, long limit);
std::vector<MinusStep> minus_cf(const Real& x, long limit, bool paper_literal = false);
std::vector<SlowStep> slow_plus(const Real& x, long limit);
std::vector<SlowStep> slow_simple(const Real& x, long limit);

// Membership of a matrix in the stream-generated families for a fixed x,
// by the defining inequalities:
//   W  = { -1 <= g(inf) <= 0, g(x) > 1 },  Gamma(x)  = W minus W1, W2
//   W' = { g(inf) <= -1,      g(x) > 0 },  Gamma(x)' = W' minus W1'
// W1: g(inf)=0, det +1; W2: g(inf)=-1, det -1; W1': g(inf)=-1, det +1.
// Rational x uses the convention that g(x) = infinity passes the ">"
// tests.
struct StreamMembership {
  bool in_w = false, in_w1 = false, in_w2 = false;
  bool in_wp = false, in_wp1 = false;
  bool in_gamma = false;        // W - (W1 u W2)
  bool in_gamma_prime = false;  // W' - W1'

  enum class Class { in_gamma, in_w1, in_w2, in_gamma_prime, in_wp1, outside };
  Class classify() const;
};

StreamMembership stream_membership(const Mat2& g, const Real& x);

}  // namespace qp
