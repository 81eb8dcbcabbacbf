#pragma once

#include "quadperiod/intpoly.hpp"
#include "quadperiod/lseries.hpp"
#include "quadperiod/qform.hpp"

#include <string>
#include <vector>

namespace qp {

// Simple forms of the negated class -B = {-Q : Q in B}, via the bijection
// Q -> -(Q|S) from B's simple forms.
std::vector<QForm> negated_class_simple_forms(const FormClass& B);

// sum over a Gamma-class' simple forms of Q(X)^{k-1}; k even.
IntPoly class_period_polynomial(const FormClass& A, int k);

// sum over all simple forms of discriminant D; k even.
IntPoly disc_period_polynomial(const Int& D, int k);

// Symmetrized Gamma1-class polynomial
//   sum_{B^Sim} Q^{k-1} + (-1)^k sum_{(-B)^Sim} Q^{k-1},  any k >= 2.
IntPoly gamma1_period_polynomial(const FormClass& B, int k);

struct CocycleResult {
  bool pass = false;
  IntPoly residual_s;  // P|(1+S)
  IntPoly residual_u;  // P|(1+U+U^2)
};

// Exact parabolic-cocycle test at the given even slash weight.
CocycleResult cocycle_check(const IntPoly& P, int weight);

// Sum of leading coefficients over all simple forms of discriminant D;
// equals -5 L(-1, D) exactly.
Int simple_a_sum(const Int& D);

}  // namespace qp
