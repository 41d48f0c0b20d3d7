#include "cheb/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace cheb::exact {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::invalid_argument("Rational: division by zero");
  }
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

Rational rational_of_float(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("rational_of_float: input is not finite");
  }
  mpq_class v;
  mpq_set_d(v.get_mpq_t(), x);  // exact: finite doubles are dyadic
  return Rational(std::move(v));
}

namespace {

// Nearest-even rounding of num/den (den > 0) to a double.  GMP's own
// mpq_get_d truncates, so the rounding is done by hand: pick the exponent e
// with 2^e <= |num|/den < 2^(e+1), quantize onto the 53-bit (or subnormal)
// grid, then round the integer quotient by its remainder.
double rounded_ratio(const BigInt& num, const BigInt& den) {
  const int sign = sgn(num);
  if (sign == 0) {
    return 0.0;
  }
  const BigInt a = abs(num);

  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  {
    // The bit-length difference can overshoot by one; fix with one compare.
    BigInt lhs = a;
    BigInt rhs = den;
    if (e >= 0) {
      rhs <<= e;
    } else {
      lhs <<= -e;
    }
    if (lhs < rhs) {
      --e;
    }
  }

  if (e >= 1024) {
    return std::copysign(std::numeric_limits<double>::infinity(), sign);
  }
  if (e <= -1077) {
    // Below half the smallest subnormal: rounds to zero.
    return std::copysign(0.0, sign);
  }

  // Quantum 2^k: full 53-bit significand in the normal range, the fixed
  // 2^-1074 grid below it.
  const long k = std::max(e - 52, -1074L);
  BigInt n = a;
  BigInt d = den;
  if (k <= 0) {
    n <<= -k;
  } else {
    d <<= k;
  }
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  r <<= 1;
  const int c = cmp(r, d);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) {
    q += 1;
  }

  // q <= 2^53, so the conversion below is exact; ldexp handles the one
  // carry-out case (q == 2^53 at e == 1023) by overflowing to infinity.
  const double m = q.get_d();
  return std::copysign(std::ldexp(m, static_cast<int>(k)), sign);
}

}  // namespace

double float_of_rational(const Rational& v) {
  return rounded_ratio(v.numerator(), v.denominator());
}

double float_of_bigint(const BigInt& n) { return rounded_ratio(n, 1); }

}  // namespace cheb::exact
