#include "cheb/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cheb::exact {

namespace {

// 2^k for q == 2^k, -1 otherwise.  q is a canonical denominator, so q >= 1.
long power_of_two_exponent(const BigInt& q) {
  if (mpz_popcount(q.get_mpz_t()) != 1) {
    return q == 1 ? 0 : -1;
  }
  return static_cast<long>(mpz_scan1(q.get_mpz_t(), 0));
}

// One step of s_n = two_p * cur - q^2 * prev, leaving the new value in cur
// and the old cur in prev.  Dyadic denominators (shift > 0 or exact zero
// with q == 1) use a limb shift instead of a full multiply.
struct Scale {
  long shift;   // 2*d when q == 2^d, else -1
  BigInt q2;    // q^2, only used when shift < 0
};

void step(BigInt& prev, BigInt& cur, BigInt& tmp, const BigInt& two_p,
          const Scale& sc) {
  mpz_mul(tmp.get_mpz_t(), two_p.get_mpz_t(), cur.get_mpz_t());
  if (sc.shift >= 0) {
    mpz_mul_2exp(prev.get_mpz_t(), prev.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(sc.shift));
  } else {
    prev *= sc.q2;
  }
  mpz_sub(prev.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
  mpz_swap(prev.get_mpz_t(), cur.get_mpz_t());
}

BigInt power(const BigInt& q, long d, int n) {
  BigInt out(1);
  if (n == 0) {
    return out;
  }
  if (d >= 0) {
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(d) * static_cast<mp_bitcnt_t>(n));
  } else {
    mpz_pow_ui(out.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return out;
}

}  // namespace

ExactEval exact_t_and_u(const Rational& x, int degree) {
  if (degree < 0) {
    throw std::invalid_argument("exact_t_and_u: negative degree");
  }
  if (degree == 0) {
    return {Rational(1), Rational(0), x, 0};
  }

  const BigInt p = x.numerator();
  const BigInt q = x.denominator();
  if (degree == 1) {
    return {x, Rational(1), x, 1};
  }

  const long d = power_of_two_exponent(q);
  Scale sc{d >= 0 ? 2 * d : -1, d >= 0 ? BigInt(0) : BigInt(q * q)};
  const BigInt two_p = 2 * p;
  BigInt tmp;

  // T up to `degree`, U up to degree - 1; both share the same step.
  BigInt t_prev(1), t_cur(p);
  BigInt u_prev(1), u_cur(two_p);
  for (int n = 2; n <= degree; ++n) {
    step(t_prev, t_cur, tmp, two_p, sc);
    if (n <= degree - 1) {
      step(u_prev, u_cur, tmp, two_p, sc);
    }
  }

  return {Rational(t_cur, power(q, d, degree)),
          Rational(u_cur, power(q, d, degree - 1)), x, degree};
}

ConditionParts condition_from_eval(const ExactEval& ev) {
  ConditionParts parts;
  parts.t_term = abs(ev.t);
  parts.x_dt_term = abs(ev.x * Rational(ev.degree) * ev.u);
  return parts;
}

ConditionParts exact_condition(const Rational& x, int degree) {
  return condition_from_eval(exact_t_and_u(x, degree));
}

double forward_error_in_eps(double computed, const Rational& exact) {
  if (!std::isfinite(computed)) {
    return std::numeric_limits<double>::infinity();
  }
  const Rational diff = abs(rational_of_float(computed) - exact);
  static const BigInt two52 = BigInt(1) << 52;
  return float_of_rational(diff * Rational(two52));
}

}  // namespace cheb::exact
