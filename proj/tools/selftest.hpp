#pragma once

#include <string>
#include <vector>

namespace cheb::cli {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< check count, or a description of the first failure
};

// Exact-identity suites: everything below is checked in rational arithmetic
// or bit-for-bit, no tolerances.
SuiteResult suite_pell_identity();          // T^2 + (1-x^2) U^2 == 1
SuiteResult suite_composition();            // T_mn == T_m(T_n(x))
SuiteResult suite_doubling_identity();      // T_2n == 2 T_n^2 - 1
SuiteResult suite_coefficient_recurrence(); // leading 2^(N-1), parity zeros
SuiteResult suite_parity_bit_exact();       // T_n(-x) == (-1)^n T_n(x) in fp

// Condition-quantity suites, sampled with the interval edges nudged so that
// floating-point thresholds never step outside the proven region.
SuiteResult suite_condition_large_x();      // C_n >= 1 on [s_n, 1]
SuiteResult suite_condition_small_x();      // C_n >= n x on [0, s_n]; >= 1 even n

// Conversion suites.
SuiteResult suite_float_roundtrip();        // 10^6 doubles through Rational
SuiteResult suite_exact_agreement();        // recurrence == rounded oracle at
                                            // exactly representable points

std::vector<SuiteResult> run_selftest();

}  // namespace cheb::cli
