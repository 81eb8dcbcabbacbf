#include "quadperiod/periods.hpp"

#include "quadperiod/errors.hpp"

#include <algorithm>

namespace qp {

std::vector<QForm> negated_class_simple_forms(const FormClass& B) {
  std::vector<QForm> out;
  out.reserve(B.simple_cycle.size());
  for (const auto& q : B.simple_cycle) out.push_back(-act(q, Mat2::S()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

IntPoly power_sum(const std::vector<QForm>& forms, int k) {
  if (k < 2) throw DomainError("weight parameter k must be >= 2");
  IntPoly acc;
  for (const auto& q : forms) acc = acc + q.poly().pow(static_cast<unsigned>(k - 1));
  return acc;
}

}  // namespace

IntPoly class_period_polynomial(const FormClass& A, int k) {
  if (k % 2 != 0) throw DomainError("Gamma-class period polynomials need even k");
  return power_sum(A.simple_cycle, k);
}

IntPoly disc_period_polynomial(const Int& D, int k) {
  if (k % 2 != 0) throw DomainError("discriminant period polynomials need even k");
  return power_sum(enumerate_forms(D, FormKind::simple), k);
}

IntPoly gamma1_period_polynomial(const FormClass& B, int k) {
  IntPoly main = power_sum(B.simple_cycle, k);
  IntPoly mirrored = power_sum(negated_class_simple_forms(B), k);
  return k % 2 == 0 ? main + mirrored : main - mirrored;
}

CocycleResult cocycle_check(const IntPoly& P, int weight) {
  if (weight % 2 != 0) throw WrongDegree("cocycle weight must be even");
  CocycleResult r;
  r.residual_s = P + slash(P, Mat2::S(), weight);
  const Mat2& U = Mat2::U();
  r.residual_u = P + slash(P, U, weight) + slash(P, U * U, weight);
  r.pass = r.residual_s.is_zero() && r.residual_u.is_zero();
  return r;
}

Int simple_a_sum(const Int& D) {
  Int total = 0;
  for (const auto& q : enumerate_forms(D, FormKind::simple)) total += q.a;
  return total;
}

}  // namespace qp
