#pragma once

#include "quadperiod/numeric.hpp"

#include <utility>
#include <vector>

namespace qp {

// Kronecker symbol (a/n) for n >= 1.
int kronecker(const Int& a, const Int& n);

// Bernoulli numbers B_0..B_n (B_1 = -1/2) and the Bernoulli polynomial
// B_n(t).
std::vector<Rat> bernoulli_numbers(unsigned n);
Rat bernoulli_poly(unsigned n, const Rat& t);

// D = D0 * f^2 with D0 a fundamental discriminant. D must be a valid
// positive non-square discriminant.
std::pair<Int, Int> fundamental_decomposition(const Int& D);

// Generalized Bernoulli number B_{n,chi} for the Kronecker character of a
// fundamental discriminant D0, via B_{n,chi} = D0^{n-1} sum_r chi(r) B_n(r/D0).
Rat generalized_bernoulli(const Int& D0, unsigned n);

// L(1-n, D) for even n >= 2, as the L-function of the discriminant D:
// for fundamental D this is L(1-n, chi_D) = -B_{n,chi_D}/n; for D = D0 f^2
// the imprimitive divisor-sum factor
//   sum_{d | f} mu(d) chi_D0(d) d^{n-1} sigma_{2n-1}(f/d)
// multiplies the fundamental value, matching the classical form-counting
// identities for all discriminants.
Rat l_value(const Int& D, const Int& s);

}  // namespace qp
