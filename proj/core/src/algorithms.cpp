#include "cheb/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cheb {

namespace {

void require_degree(int degree, int least) {
  if (degree < least) {
    throw std::invalid_argument("degree must be at least " +
                                std::to_string(least));
  }
}

}  // namespace

std::string_view label(Algorithm alg) {
  switch (alg) {
    case Algorithm::recurrence: return "I";
    case Algorithm::doubling: return "II";
    case Algorithm::trig: return "III";
    case Algorithm::horner: return "IV";
  }
  throw std::invalid_argument("label: bad Algorithm value");
}

std::string_view name(Algorithm alg) {
  switch (alg) {
    case Algorithm::recurrence: return "recurrence";
    case Algorithm::doubling: return "doubling";
    case Algorithm::trig: return "trig";
    case Algorithm::horner: return "horner";
  }
  throw std::invalid_argument("name: bad Algorithm value");
}

std::optional<Algorithm> algorithm_from_token(std::string_view token) {
  std::string t(token);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (Algorithm alg : all_algorithms) {
    if (t == label(alg)) {
      return alg;
    }
  }
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Algorithm alg : all_algorithms) {
    if (t == name(alg)) {
      return alg;
    }
  }
  return std::nullopt;
}

bool is_power_of_two(int n) {
  return n > 0 && std::has_single_bit(static_cast<unsigned>(n));
}

bool algorithm_accepts_degree(Algorithm alg, int degree) {
  if (alg == Algorithm::doubling) {
    return is_power_of_two(degree);
  }
  return degree >= 0;
}

double eval_recurrence(double x, int degree) {
  require_degree(degree, 0);
  if (degree == 0) {
    return 1.0;
  }
  if (degree == 1) {
    return x;
  }
  const double two_x = 2.0 * x;  // exact: scaling by two
  double prev = 1.0;
  double cur = x;
  for (int n = 2; n <= degree; ++n) {
    // One rounded product and one rounded subtraction per step.
    const double next = two_x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double eval_doubling(double x, int log2_degree) {
  if (log2_degree < 0) {
    throw std::invalid_argument("eval_doubling: negative exponent");
  }
  double r = x;
  for (int i = 0; i < log2_degree; ++i) {
    const double sq = r * r;  // rounded square
    r = 2.0 * sq - 1.0;       // exact doubling, rounded subtraction
  }
  return r;
}

double eval_trig(double x, int degree) {
  require_degree(degree, 0);
  if (!(std::abs(x) <= 1.0)) {  // also rejects NaN
    throw std::domain_error("eval_trig: x outside [-1, 1]");
  }
  return std::cos(static_cast<double>(degree) * std::acos(x));
}

CoefficientVector expanded_coefficients(int degree) {
  require_degree(degree, 0);
  if (degree == 0) {
    return {{BigInt(1)}};
  }
  std::vector<BigInt> prev{BigInt(1)};          // T_0
  std::vector<BigInt> cur{BigInt(0), BigInt(1)};  // T_1
  for (int n = 2; n <= degree; ++n) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
      next[k] = 2 * cur[k - 1];
    }
    for (int k = 0; k <= n - 2; ++k) {
      next[k] -= prev[k];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {std::move(cur)};
}

std::vector<double> float_coefficients(const CoefficientVector& c) {
  std::vector<double> out;
  out.reserve(c.coeffs.size());
  for (const BigInt& a : c.coeffs) {
    out.push_back(exact::float_of_bigint(a));
  }
  return out;
}

double eval_horner(std::span<const double> coeffs, double x) {
  if (coeffs.empty()) {
    throw std::invalid_argument("eval_horner: empty coefficients");
  }
  double acc = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    acc = acc * x + coeffs[k];  // two roundings; no fused contraction
  }
  return acc;
}

double eval_horner(const CoefficientVector& c, double x) {
  const std::vector<double> coeffs = float_coefficients(c);
  return eval_horner(std::span<const double>(coeffs), x);
}

double eval_second_kind(double x, int degree) {
  require_degree(degree, 0);
  if (degree == 0) {
    return 1.0;
  }
  const double two_x = 2.0 * x;
  if (degree == 1) {
    return two_x;
  }
  double prev = 1.0;
  double cur = two_x;
  for (int n = 2; n <= degree; ++n) {
    const double next = two_x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> roots_first_kind(int degree) {
  require_degree(degree, 1);
  std::vector<double> roots(static_cast<std::size_t>(degree));
  for (int i = 1; i <= degree; ++i) {
    roots[static_cast<std::size_t>(i) - 1] =
        std::cos((2.0 * i - 1.0) * std::numbers::pi / (2.0 * degree));
  }
  return roots;
}

std::vector<double> extrema_points(int degree) {
  require_degree(degree, 2);
  std::vector<double> points(static_cast<std::size_t>(degree) - 1);
  for (int i = 1; i <= degree - 1; ++i) {
    points[static_cast<std::size_t>(i) - 1] =
        std::cos(i * std::numbers::pi / degree);
  }
  return points;
}

std::function<double(double)> make_evaluator(Algorithm alg, int degree) {
  require_degree(degree, 0);
  switch (alg) {
    case Algorithm::recurrence:
      return [degree](double x) { return eval_recurrence(x, degree); };
    case Algorithm::doubling: {
      if (!is_power_of_two(degree)) {
        throw std::invalid_argument(
            "make_evaluator: DOUBLING needs a power-of-two degree");
      }
      const int p = std::countr_zero(static_cast<unsigned>(degree));
      return [p](double x) { return eval_doubling(x, p); };
    }
    case Algorithm::trig:
      return [degree](double x) { return eval_trig(x, degree); };
    case Algorithm::horner: {
      auto coeffs = std::make_shared<const std::vector<double>>(
          float_coefficients(expanded_coefficients(degree)));
      return [coeffs](double x) {
        return eval_horner(std::span<const double>(*coeffs), x);
      };
    }
  }
  throw std::invalid_argument("make_evaluator: bad Algorithm value");
}

}  // namespace cheb
