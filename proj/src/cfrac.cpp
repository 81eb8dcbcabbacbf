#include "quadperiod/cfrac.hpp"

#include "quadperiod/errors.hpp"

#include <utility>

namespace qp {

namespace {

// delta_i from the convergents and the original x, which keeps interval
// widths tight: one multiply and one subtract from the input enclosure.
Real delta_from_convergents(const Int& p, const Int& q, const Real& x, bool flip_sign) {
  Real v = Real::integer(p) - Real::integer(q) * x;
  if (flip_sign) v = -v;
  if (v.is_interval()) {
    // delta >= 0 holds exactly; intersect the enclosure with that fact.
    return Real::interval(v.as_interval().clamp_lower(Rat(0)));
  }
  return v;
}

Real state_from_matrix(const Mat2& g, const Real& x) {
  auto v = mobius(g, x);
  if (!v) throw DomainError("stream state unexpectedly infinite");
  return *v;
}

}  // namespace

PlusStream::PlusStream(Real x) : x_(std::move(x)), exact_(x_.is_exact()), state_(x_) {}

std::optional<PlusStep> PlusStream::next() {
  if (done_) return std::nullopt;
  if (final_pending_) {
    PlusStep st;
    st.index = index_;
    st.digit = std::nullopt;
    st.state = std::nullopt;
    st.gamma = gamma_;
    st.p_prev = p_prev_;
    st.q_prev = q_prev_;
    st.delta = Real::integer(0);
    done_ = true;
    return st;
  }

  Real xi = *state_;
  Int n = xi.floor();  // may throw InsufficientPrecision

  PlusStep st;
  st.index = index_;
  st.digit = n;
  st.state = xi;
  st.gamma = gamma_;
  st.p_prev = p_prev_;
  st.q_prev = q_prev_;
  st.delta = delta_;

  // Advance to step i+1.
  Int p_i = n * p_prev_ + p_prev2_;
  Int q_i = n * q_prev_ + q_prev2_;
  gamma_ = Mat2::eps() * Mat2::T_pow(-n) * gamma_;
  p_prev2_ = std::exchange(p_prev_, p_i);
  q_prev2_ = std::exchange(q_prev_, q_i);
  ++index_;

  if (exact_ && (xi - Real::integer(n)).sign() == 0) {
    final_pending_ = true;
    state_ = std::nullopt;
    delta_ = Real::integer(0);
  } else {
    state_ = state_from_matrix(gamma_, x_);
    delta_ = delta_from_convergents(p_i, q_i, x_, index_ % 2 != 0);
  }
  return st;
}

MinusStream::MinusStream(Real x, bool paper_literal)
    : x_(std::move(x)), exact_(x_.is_exact()), literal_(paper_literal), state_(x_) {}

std::optional<MinusStep> MinusStream::next() {
  if (done_) return std::nullopt;
  if (final_pending_) {
    MinusStep st;
    st.index = index_;
    st.digit = std::nullopt;
    st.state = std::nullopt;
    st.gamma = gamma_;
    st.p_prev = p_prev_;
    st.q_prev = q_prev_;
    st.delta = Real::integer(0);
    done_ = true;
    return st;
  }

  Real xi = *state_;
  bool integral = exact_ && xi.is_integer();
  Int m;
  if (literal_) {
    m = xi.ceil() + 1;
  } else if (integral) {
    m = xi.as_rational().convert_to<Int>();
  } else {
    m = xi.ceil();  // may throw InsufficientPrecision
  }

  MinusStep st;
  st.index = index_;
  st.digit = m;
  st.state = xi;
  st.gamma = gamma_;
  st.p_prev = p_prev_;
  st.q_prev = q_prev_;
  st.delta = delta_;

  Int p_i = m * p_prev_ - p_prev2_;
  Int q_i = m * q_prev_ - q_prev2_;
  gamma_ = Mat2::S() * Mat2::T_pow(-m) * gamma_;
  p_prev2_ = std::exchange(p_prev_, p_i);
  q_prev2_ = std::exchange(q_prev_, q_i);
  ++index_;

  if (integral && !literal_) {
    final_pending_ = true;
    state_ = std::nullopt;
    delta_ = Real::integer(0);
  } else {
    state_ = state_from_matrix(gamma_, x_);
    delta_ = delta_from_convergents(p_i, q_i, x_, false);
  }
  return st;
}

SlowStream::SlowStream(Real x, SlowKind kind)
    : kind_(kind), exact_(x.is_exact()), state_(std::move(x)) {
  if (exact_) seen_.emplace_back(state_, 0);
}

std::optional<SlowStep> SlowStream::next() {
  if (done_) return std::nullopt;

  SlowBranch branch;
  Mat2 step = Mat2::identity();
  int s = state_.sign();  // certified; throws for straddling intervals
  if (s <= 0) {
    branch = SlowBranch::shift_up;
    step = Mat2::T();
  } else {
    int c1 = state_.cmp_int(1);
    bool flip = kind_ == SlowKind::plus ? c1 <= 0 : c1 < 0;
    if (flip) {
      branch = SlowBranch::flip;
      step = kind_ == SlowKind::plus ? Mat2::T().inverse() * Mat2::eps()
                                     : Mat2::T().inverse() * Mat2::S() * Mat2::T().inverse();
    } else {
      branch = SlowBranch::shift_down;
      step = Mat2::T().inverse();
    }
  }

  auto nxt = mobius(step, state_);
  if (!nxt) throw DomainError("slow stream hit a pole");
  state_ = *nxt;
  gamma_ = step * gamma_;
  ++index_;

  SlowStep st;
  st.index = index_;
  st.branch = branch;
  st.state = state_;
  st.gamma = gamma_;

  if (exact_) {
    if (state_.is_zero()) {
      hit_zero_ = true;
      done_ = true;
    } else if (kind_ == SlowKind::simple) {
      for (const auto& [prev, idx] : seen_) {
        if (prev == state_) {
          cycle_ = SlowCycle{idx, index_ - idx};
          done_ = true;
          break;
        }
      }
    }
    if (!done_) seen_.emplace_back(state_, index_);
  }
  return st;
}

std::vector<PlusStep> plus_cf(const Real& x, long limit) {
  if (limit < 1) throw DomainError("step limit must be >= 1");
  std::vector<PlusStep> out;
  PlusStream stream(x);
  // The closing step of a rational input rides along with the last digit.
  for (long i = 0; i <= limit; ++i) {
    auto st = stream.next();
    if (!st) break;
    out.push_back(std::move(*st));
  }
  return out;
}

std::vector<MinusStep> minus_cf(const Real& x, long limit, bool paper_literal) {
  if (limit < 1) throw DomainError("step limit must be >= 1");
  std::vector<MinusStep> out;
  MinusStream stream(x, paper_literal);
  for (long i = 0; i <= limit; ++i) {
    auto st = stream.next();
    if (!st) break;
    out.push_back(std::move(*st));
  }
  return out;
}

std::vector<SlowStep> slow_plus(const Real& x, long limit) {
  if (limit < 1) throw DomainError("step limit must be >= 1");
  std::vector<SlowStep> out;
  SlowStream stream(x, SlowKind::plus);
  for (long i = 0; i < limit; ++i) {
    auto st = stream.next();
    if (!st) break;
    out.push_back(std::move(*st));
  }
  return out;
}

std::vector<SlowStep> slow_simple(const Real& x, long limit) {
  if (limit < 1) throw DomainError("step limit must be >= 1");
  std::vector<SlowStep> out;
  SlowStream stream(x, SlowKind::simple);
  for (long i = 0; i < limit; ++i) {
    auto st = stream.next();
    if (!st) break;
    out.push_back(std::move(*st));
  }
  return out;
}

StreamMembership::Class StreamMembership::classify() const {
  if (in_gamma) return Class::in_gamma;
  if (in_w1) return Class::in_w1;
  if (in_w2) return Class::in_w2;
  if (in_gamma_prime) return Class::in_gamma_prime;
  if (in_wp1) return Class::in_wp1;
  return Class::outside;
}

StreamMembership stream_membership(const Mat2& g, const Real& x) {
  StreamMembership m;
  auto ginf = mobius_infinity(g);
  if (!ginf) return m;  // g(inf) = inf lies in neither family

  auto gx = mobius(g, x);
  // g(x) = infinity (rational x) passes each strict lower bound.
  auto gx_above = [&](long bound) {
    if (!gx) return true;
    return gx->cmp_int(bound) > 0;
  };

  Int d = g.det();
  bool inf_in_w = *ginf >= -1 && *ginf <= 0;
  bool inf_in_wp = *ginf <= -1;
  if (inf_in_w && gx_above(1)) {
    m.in_w = true;
    m.in_w1 = ginf->is_zero() && d == 1;
    m.in_w2 = *ginf == -1 && d == -1;
    m.in_gamma = !m.in_w1 && !m.in_w2;
  }
  if (inf_in_wp && gx_above(0)) {
    m.in_wp = true;
    m.in_wp1 = *ginf == -1 && d == 1;
    m.in_gamma_prime = !m.in_wp1;
  }
  return m;
}

}  // namespace qp
