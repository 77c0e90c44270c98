#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace radial {

using BigInt = mpz_class;
/// Canonical fraction (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string format_rational(const Rational& q);  // always "p/q"

/// Exact element a + b*sqrt(d) of Q(sqrt d), d = 2K - 1.
///
/// d == 0 marks a scalar that has not been bound to a field yet (b is then
/// always zero); it combines with any d. Mixing two different nonzero d is
/// an error. When d is a perfect square, b*sqrt(d) is folded into a.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a, Rational b, int d);

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt_part() const { return b_; }
  int d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  /// -1, 0 or +1, decided exactly.
  int sign() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& y);
  QuadScalar& operator-=(const QuadScalar& y);
  QuadScalar& operator*=(const QuadScalar& y);
  QuadScalar& operator/=(const QuadScalar& y);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

  /// Componentwise equality after normalization; the unbound d never matters.
  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  double to_double() const;

 private:
  void normalize();
  static int common_d(int d1, int d2);

  Rational a_;
  Rational b_;
  int d_ = 0;
};

/// Throws std::domain_error for zero.
QuadScalar invert(const QuadScalar& x);

QuadScalar abs(const QuadScalar& x);

/// Exact total order on the reals embedded in Q(sqrt d).
int compare(const QuadScalar& x, const QuadScalar& y);

/// d^{e/2}: rational for even e, rational multiple of sqrt(d) for odd e.
QuadScalar sqrt_d_power(int d, int e);

/// "p/q + r/s*sqrt(d)", with d printed explicitly (d = 0 prints as sqrt(0)).
std::string format_scalar(const QuadScalar& x);
std::string format_scalar(const QuadScalar& x, int d);

/// Inverse of format_scalar. Also accepts a bare rational "p/q" or integer.
QuadScalar parse_scalar(std::string_view text);

}  // namespace radial
