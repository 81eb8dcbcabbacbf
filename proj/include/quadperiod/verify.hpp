#pragma once

#include "quadperiod/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using CheckList = std::vector<CheckResult>;

// The ten acceptance checks. Each returns pass/fail with a short detail
// line; failures never throw.
CheckResult check_zagier_tables();
CheckResult check_constant_value(const Int& Dmax = 30);
CheckResult check_weight6_failure();
CheckResult check_representation_equivalence(std::uint64_t seed = 20260810);
CheckResult check_bijection_audits(const Int& Dmax = 50);
CheckResult check_cocycles(const Int& Dmax = 50);
CheckResult check_dual_l_oracle(const Int& Dmax = 200);
CheckResult check_counts_and_cycles(const Int& Dmax_counts = 200, const Int& Dmax_period = 100);
CheckResult check_stream_laws();
CheckResult check_sum_identities();

CheckList run_all_checks(std::uint64_t seed = 20260810);

// Valid non-square discriminants up to and including bound.
std::vector<Int> discriminants_up_to(const Int& bound);

}  // namespace qp
