#include "selftest.hpp"

#include <cheb/algorithms.hpp>
#include <cheb/oracle.hpp>
#include <cheb/stability.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>

namespace cheb::cli {

namespace {

using exact::Rational;

std::string checks_label(long n) {
  std::ostringstream os;
  os << n << " checks";
  return os.str();
}

template <class... Args>
std::string describe(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

SuiteResult suite_pell_identity() {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  long checks = 0;
  for (int n = 1; n <= 200; ++n) {
    for (int rep = 0; rep < 2; ++rep) {
      const double x = dist(rng);
      const auto ev = exact::exact_t_and_u(exact::rational_of_float(x), n);
      const Rational lhs =
          ev.t * ev.t + (Rational(1) - ev.x * ev.x) * ev.u * ev.u;
      if (!(lhs == Rational(1))) {
        return {"pell-identity", false, describe("fails at n=", n, " x=", x)};
      }
      ++checks;
    }
  }
  return {"pell-identity", true, checks_label(checks)};
}

SuiteResult suite_composition() {
  std::mt19937_64 rng(0xc2b2ae3d27d4eb4fULL);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  long checks = 0;
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      const Rational x = exact::rational_of_float(dist(rng));
      const Rational inner = exact::exact_t_and_u(x, n).t;
      const Rational composed = exact::exact_t_and_u(inner, m).t;
      const Rational direct = exact::exact_t_and_u(x, m * n).t;
      if (!(composed == direct)) {
        return {"composition", false, describe("fails at m=", m, " n=", n)};
      }
      ++checks;
    }
  }
  return {"composition", true, checks_label(checks)};
}

SuiteResult suite_doubling_identity() {
  std::mt19937_64 rng(0x165667b19e3779f9ULL);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  long checks = 0;
  for (int n = 1; n <= 100; ++n) {
    const Rational x = exact::rational_of_float(dist(rng));
    const Rational tn = exact::exact_t_and_u(x, n).t;
    const Rational t2n = exact::exact_t_and_u(x, 2 * n).t;
    if (!(t2n == Rational(2) * tn * tn - Rational(1))) {
      return {"doubling-identity", false, describe("fails at n=", n)};
    }
    ++checks;
  }
  return {"doubling-identity", true, checks_label(checks)};
}

SuiteResult suite_coefficient_recurrence() {
  // Mirror the vector recurrence once up to 300, checking structure at every
  // degree and cross-checking the library result at a few.
  std::mt19937_64 rng(0x27d4eb2f165667c5ULL);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<BigInt> prev{BigInt(1)};
  std::vector<BigInt> cur{BigInt(0), BigInt(1)};
  long checks = 0;
  for (int n = 1; n <= 300; ++n) {
    if (n >= 2) {
      std::vector<BigInt> next(static_cast<std::size_t>(n) + 1);
      for (int k = 1; k <= n; ++k) next[k] = 2 * cur[k - 1];
      for (int k = 0; k <= n - 2; ++k) next[k] -= prev[k];
      prev = std::move(cur);
      cur = std::move(next);
    }
    if (cur.back() != (BigInt(1) << (n - 1))) {
      return {"coefficient-recurrence", false,
              describe("leading coefficient wrong at N=", n)};
    }
    for (int k = n % 2 == 0 ? 1 : 0; k <= n; k += 2) {
      if (cur[static_cast<std::size_t>(k)] != 0) {
        return {"coefficient-recurrence", false,
                describe("parity zero violated at N=", n, " k=", k)};
      }
    }
    ++checks;
  }
  for (int n : {1, 2, 7, 8, 64, 150, 300}) {
    const CoefficientVector c = expanded_coefficients(n);
    if (c.degree() != n) {
      return {"coefficient-recurrence", false, describe("bad degree for N=", n)};
    }
    // Exact polynomial evaluation must reproduce the oracle.
    const Rational x = exact::rational_of_float(dist(rng));
    Rational acc{c.coeffs.back()};
    for (std::size_t k = c.coeffs.size() - 1; k-- > 0;) {
      acc = acc * x + Rational(c.coeffs[k]);
    }
    if (!(acc == exact::exact_t_and_u(x, n).t)) {
      return {"coefficient-recurrence", false,
              describe("polynomial disagrees with recurrence at N=", n)};
    }
    ++checks;
  }
  return {"coefficient-recurrence", true, checks_label(checks)};
}

SuiteResult suite_parity_bit_exact() {
  std::mt19937_64 rng(0x85ebca6b2545f491ULL);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::uniform_int_distribution<int> degree_dist(0, 40);
  std::vector<std::vector<double>> horner_coeffs;
  for (int n = 0; n <= 40; ++n) {
    horner_coeffs.push_back(float_coefficients(expanded_coefficients(n)));
  }
  long checks = 0;
  for (int rep = 0; rep < 10000; ++rep) {
    double x = dist(rng);
    if (x == 0.0) {
      continue;  // +/-0 differ in sign bit, not in value
    }
    const int n = degree_dist(rng);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    const auto mirrored = [&](double v) {
      return std::bit_cast<std::uint64_t>(sign * v);
    };
    if (std::bit_cast<std::uint64_t>(eval_recurrence(-x, n)) !=
        mirrored(eval_recurrence(x, n))) {
      return {"parity-bit-exact", false, describe("recurrence at x=", x, " n=", n)};
    }
    if (std::bit_cast<std::uint64_t>(eval_second_kind(-x, n)) !=
        mirrored(eval_second_kind(x, n))) {
      return {"parity-bit-exact", false,
              describe("second kind at x=", x, " n=", n)};
    }
    if (std::bit_cast<std::uint64_t>(eval_horner(
            std::span<const double>(horner_coeffs[static_cast<std::size_t>(n)]),
            -x)) != mirrored(eval_horner(
                        std::span<const double>(
                            horner_coeffs[static_cast<std::size_t>(n)]),
                        x))) {
      return {"parity-bit-exact", false, describe("horner at x=", x, " n=", n)};
    }
    if (is_power_of_two(n)) {
      const int p = std::countr_zero(static_cast<unsigned>(n));
      if (std::bit_cast<std::uint64_t>(eval_doubling(-x, p)) !=
          mirrored(eval_doubling(x, p))) {
        return {"parity-bit-exact", false, describe("doubling at x=", x, " n=", n)};
      }
    }
    ++checks;
  }
  return {"parity-bit-exact", true, checks_label(checks)};
}

SuiteResult suite_condition_large_x() {
  std::mt19937_64 rng(0xd6e8feb86659fd93ULL);
  long checks = 0;
  for (int n = 1; n <= 100; ++n) {
    // Two ulps up: the rounded threshold may sit just below the real s_n.
    double lo = stability::threshold_s(n);
    lo = std::nextafter(std::nextafter(lo, 1.0), 1.0);
    std::uniform_real_distribution<double> dist(lo, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
      const double x = dist(rng);
      const auto c = exact::exact_condition(exact::rational_of_float(x), n);
      if (!(c.total() >= Rational(1))) {
        return {"condition-large-x", false, describe("C_", n, "(", x, ") < 1")};
      }
      ++checks;
    }
  }
  return {"condition-large-x", true, checks_label(checks)};
}

SuiteResult suite_condition_small_x() {
  std::mt19937_64 rng(0xca62c1d64f1bbcdcULL);
  long checks = 0;
  for (int n = 1; n <= 100; ++n) {
    double hi = stability::threshold_s(n);
    hi = std::nextafter(std::nextafter(hi, 0.0), 0.0);
    std::uniform_real_distribution<double> dist(0.0, hi);
    for (int rep = 0; rep < 50; ++rep) {
      const double x = dist(rng);
      const Rational rx = exact::rational_of_float(x);
      const Rational c = exact::exact_condition(rx, n).total();
      if (!(c >= Rational(n) * rx)) {
        return {"condition-small-x", false, describe("C_", n, "(", x, ") < nx")};
      }
      if (n % 2 == 0 && !(c >= Rational(1))) {
        return {"condition-small-x", false,
                describe("even C_", n, "(", x, ") < 1")};
      }
      ++checks;
    }
  }
  return {"condition-small-x", true, checks_label(checks)};
}

SuiteResult suite_float_roundtrip() {
  std::mt19937_64 rng(0x2545f4914f6cdd1dULL);
  long checks = 0;
  while (checks < 1000000) {
    const auto bits = rng();
    const double x = std::bit_cast<double>(bits);
    if (!std::isfinite(x) || x == 0.0) {
      continue;
    }
    const double back = exact::float_of_rational(exact::rational_of_float(x));
    if (std::bit_cast<std::uint64_t>(back) != bits) {
      return {"float-roundtrip", false, describe("x=", x)};
    }
    ++checks;
  }
  return {"float-roundtrip", true, checks_label(checks)};
}

SuiteResult suite_exact_agreement() {
  long checks = 0;
  for (const double x : {0.0, 1.0, -1.0, 0.5, -0.5, 0.25, -0.25}) {
    for (int n = 0; n <= 20; ++n) {
      const double via_oracle = exact::float_of_rational(
          exact::exact_t_and_u(exact::rational_of_float(x), n).t);
      const double direct = eval_recurrence(x, n);
      if (via_oracle != direct) {
        return {"exact-agreement", false, describe("x=", x, " n=", n)};
      }
      ++checks;
    }
  }
  return {"exact-agreement", true, checks_label(checks)};
}

std::vector<SuiteResult> run_selftest() {
  return {
      suite_pell_identity(),      suite_composition(),
      suite_doubling_identity(),  suite_coefficient_recurrence(),
      suite_parity_bit_exact(),   suite_condition_large_x(),
      suite_condition_small_x(),  suite_float_roundtrip(),
      suite_exact_agreement(),
  };
}

}  // namespace cheb::cli
