#pragma once

#include <cheb/rational.hpp>

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cheb {

/// The four evaluation schemes for T_N, numbered I-IV in reports.
enum class Algorithm {
  recurrence,  ///< I: three-term recurrence
  doubling,    ///< II: repeated T_2n = 2 T_n^2 - 1, degrees 2^p only
  trig,        ///< III: cos(N acos x)
  horner,      ///< IV: Horner on the expanded power-basis coefficients
};

inline constexpr Algorithm all_algorithms[] = {
    Algorithm::recurrence, Algorithm::doubling, Algorithm::trig,
    Algorithm::horner};

/// Roman-numeral label used in tables and CSV ("I".."IV").
std::string_view label(Algorithm alg);

/// Lower-case scheme name ("recurrence", ...).
std::string_view name(Algorithm alg);

/// Accepts both spellings, case-insensitive.  Empty for unknown tokens.
std::optional<Algorithm> algorithm_from_token(std::string_view token);

bool is_power_of_two(int n);

/// DOUBLING only reaches degrees 2^p; everything else takes any N >= 0.
bool algorithm_accepts_degree(Algorithm alg, int degree);

/// T_N(x) by the three-term recurrence T_n = 2x T_{n-1} - T_{n-2}.
/// Degrees 0 and 1 return 1 and x without entering the loop.
double eval_recurrence(double x, int degree);

/// T_N(x) for N = 2^log2_degree by squaring: R <- 2 R^2 - 1, starting from x.
double eval_doubling(double x, int log2_degree);

/// cos(N acos x).  Throws std::domain_error unless -1 <= x <= 1.
double eval_trig(double x, int degree);

/// Coefficients of a polynomial in the power basis; coeffs[k] multiplies x^k.
/// The integers grow like 2^(N-1), hence exact storage.
struct CoefficientVector {
  std::vector<BigInt> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Exact power-basis coefficients of T_N, from the recurrence on vectors.
CoefficientVector expanded_coefficients(int degree);

/// Each coefficient correctly rounded to double; +/-infinity once the
/// integers leave the double range (N ~ 1024 and beyond).
std::vector<double> float_coefficients(const CoefficientVector& c);

/// Horner evaluation of sum coeffs[k] x^k; coeffs must be non-empty.
double eval_horner(std::span<const double> coeffs, double x);

/// Convenience overload: rounds the exact coefficients, then runs Horner.
double eval_horner(const CoefficientVector& c, double x);

/// U_N(x) by the same recurrence seeded with U_0 = 1, U_1 = 2x.
double eval_second_kind(double x, int degree);

/// The N roots cos((2i-1) pi / 2N), i = 1..N, in decreasing order.
std::vector<double> roots_first_kind(int degree);

/// The N-1 interior extrema cos(i pi / N), i = 1..N-1, in decreasing order;
/// T_N alternates +/-1 there.  Requires N >= 2.
std::vector<double> extrema_points(int degree);

/// A single-point evaluator for the given scheme and degree.  For HORNER the
/// rounded coefficients are computed once and shared by all calls; for
/// DOUBLING the degree must be a power of two (std::invalid_argument
/// otherwise).
std::function<double(double)> make_evaluator(Algorithm alg, int degree);

}  // namespace cheb
