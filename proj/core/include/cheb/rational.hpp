#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

namespace cheb {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

namespace exact {

/// Unit in which forward errors are reported: 2^-52, the spacing of
/// binary64 doubles in [1, 2).
inline constexpr double machine_eps = 0x1p-52;

/// Arbitrary-precision rational with value semantics.  Instances are always
/// in canonical form (lowest terms, positive denominator), so operator== is
/// value equality.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: integers embed implicitly
  explicit Rational(const BigInt& value) : v_(value) {}

  /// Builds num/den in canonical form.  Throws std::invalid_argument when
  /// den is zero.
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  /// Throws std::invalid_argument when o is zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

  /// "num/den", or just "num" for integers.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  friend Rational rational_of_float(double x);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// Exact value of a finite double.  Throws std::invalid_argument for NaN or
/// infinities.  Every finite double is a dyadic rational, so no rounding is
/// involved.
Rational rational_of_float(double x);

/// Nearest double to v, ties to even; overflow gives +/-infinity, values
/// below half the smallest subnormal give (signed) zero.
double float_of_rational(const Rational& v);

/// Same rounding for a plain integer.
double float_of_bigint(const BigInt& n);

}  // namespace exact
}  // namespace cheb
