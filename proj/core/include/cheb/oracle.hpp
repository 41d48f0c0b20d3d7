#pragma once

#include <cheb/rational.hpp>

namespace cheb::exact {

/// Exact values of T_N and U_{N-1} at a rational point.
struct ExactEval {
  Rational t;  ///< T_N(x)
  Rational u;  ///< U_{N-1}(x); zero when N == 0
  Rational x;
  int degree = 0;
};

/// Runs the three-term recurrences in scaled integers: for x = p/q the
/// numbers s_n = T_n(x) q^n satisfy s_n = 2p s_{n-1} - q^2 s_{n-2}, so the
/// whole computation is exact.  Throws std::invalid_argument for degree < 0.
ExactEval exact_t_and_u(const Rational& x, int degree);

/// The two summands of the condition quantity |T_N(x)| + |x T_N'(x)|,
/// kept separate; the derivative uses T_N' = N U_{N-1}.
struct ConditionParts {
  Rational t_term;    ///< |T_N(x)|
  Rational x_dt_term; ///< |x T_N'(x)| = N |x U_{N-1}(x)|
  Rational total() const { return t_term + x_dt_term; }
};

ConditionParts exact_condition(const Rational& x, int degree);

/// Same, reusing an evaluation that is already available.
ConditionParts condition_from_eval(const ExactEval& ev);

/// |computed - exact| / machine_eps, formed exactly in rationals and rounded
/// once.  Non-finite computed values give +infinity.
double forward_error_in_eps(double computed, const Rational& exact);

}  // namespace cheb::exact
