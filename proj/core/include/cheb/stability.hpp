#pragma once

#include <cheb/algorithms.hpp>

#include <optional>
#include <span>
#include <vector>

namespace cheb::stability {

/// Relative slack applied when an observed constant is compared against a
/// first-order bound; absorbs the neglected O(eps^2) terms.
inline constexpr double order_eps2_slack = 1e-8;

/// s_N = 1 / sqrt(N^2 + 1): the point separating the small-|x| regime, where
/// the condition quantity can vanish, from the large-|x| regime where it is
/// at least 1.  Requires N >= 1.
double threshold_s(int degree);

/// Forward-error constants for the recurrence, in units of eps: the global
/// bound 3N(N-1)/2, and on |x| <= s_N the bound 9(N-1)/2.  Require N >= 2.
double bound_alg1_global(int degree);
double bound_alg1_small_x(int degree);

/// Pointwise small-|x| bound for odd N: 5(N-1)(N+7)/8 * |x|.  Requires odd
/// N >= 3 and |x| <= s_N.
double bound_alg1_small_x_odd(int degree, double x);

/// Forward-error constant N^2 for the doubling scheme; N must be 2^p.
double bound_alg2(int degree);

enum class Region {
  large_x,  ///< |x| > s_N
  small_x,  ///< |x| <= s_N
};

/// Turns forward-error constants into a backward one, L, in
/// |computed - exact| <= eps * L * (|T_N| + |x T_N'|):
///   - even N, either region: L = l1 (the flat constant valid there);
///   - odd N, large |x|:      L = l1;
///   - odd N, small |x|:      L = l2 / N, where the flat bound fails near
///     the zero of T_N and l2 is the constant of the |x|-proportional bound.
/// Requires N >= 2, l1 >= 0; the odd/small case requires l2.
double backward_constant_from_forward(int degree, Region region, double l1,
                                      std::optional<double> l2 = std::nullopt);

/// Result of checking one algorithm at one degree over a set of points.
/// l_observed is the largest ratio |computed - exact| / (eps * C_N(x)) over
/// the points; l_theoretical is the corresponding a-priori constant when the
/// scheme has one (RECURRENCE, DOUBLING), and empty otherwise.
struct StabilityCertificate {
  Algorithm algorithm;
  int degree = 0;
  int point_count = 0;
  double l_observed = 0.0;
  std::optional<double> l_theoretical;
  double worst_point = 0.0;  ///< first point attaining l_observed
  bool passed = false;
};

/// Evaluates the scheme on every point, compares against the exact values,
/// and assembles the certificate.  passed means: no non-finite result at a
/// point with finite condition quantity, and l_observed within the bound
/// (with order_eps2_slack) whenever a bound exists.  Points where C_N(x) = 0
/// contribute 0 when the computed value is exact and +infinity otherwise.
/// Requires all points in [-1, 1] and a degree the scheme accepts.
StabilityCertificate certify(Algorithm alg, int degree,
                             std::span<const double> points);

namespace detail {

/// Per-point record shared by certify and the sweep harness, so one exact
/// evaluation serves both the error statistic and the certificate.
struct PointEvaluation {
  double computed = 0.0;
  double error_eps = 0.0;       ///< |computed - T_N| / eps
  double l_contribution = 0.0;  ///< |computed - T_N| / (eps * C_N)
  bool nonfinite = false;
};

std::vector<PointEvaluation> evaluate_points(Algorithm alg, int degree,
                                             std::span<const double> points);

StabilityCertificate certificate_from_points(
    Algorithm alg, int degree, std::span<const double> points,
    std::span<const PointEvaluation> evals);

}  // namespace detail

}  // namespace cheb::stability
