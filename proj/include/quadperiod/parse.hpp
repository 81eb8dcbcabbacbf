#pragma once

#include "quadperiod/real.hpp"

#include <string>

namespace qp {

// Parses a real-number expression:
//   integer | a/b | decimal | (a±b*sqrt(D))/c | sqrt(D) | pi | 1/pi | e | 1/e
// with an optional leading sign. Transcendental constants become intervals
// at `prec` bits; everything else is exact. Locale-independent.
Real parse_real(const std::string& text, mpfr_prec_t prec = 128);

}  // namespace qp
