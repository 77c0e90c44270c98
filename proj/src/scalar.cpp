#include "radial/scalar.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace radial {

namespace {

// Positive square root when d is a perfect square, else 0.
long exact_root(int d) {
  if (d <= 0) return 0;
  auto r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(d))));
  for (long c = std::max(0L, r - 1); c <= r + 1; ++c) {
    if (c * c == d) return c;
  }
  return 0;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

QuadScalar::QuadScalar(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d < 0) throw std::invalid_argument("negative radicand");
  if (d == 0 && sgn(b_) != 0) throw std::invalid_argument("sqrt part requires a bound d > 0");
  normalize();
}

void QuadScalar::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) return;
  if (long r = exact_root(d_); r != 0) {
    a_ += b_ * r;
    b_ = 0;
  }
}

int QuadScalar::common_d(int d1, int d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw std::invalid_argument("scalars from different fields: sqrt(" + std::to_string(d1) +
                              ") vs sqrt(" + std::to_string(d2) + ")");
}

int QuadScalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d (never equal for non-square d).
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * d_;
  return lhs > rhs ? sa : sb;
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& y) {
  d_ = common_d(d_, y.d_);
  a_ += y.a_;
  if (sgn(y.b_) != 0) b_ += y.b_;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& y) {
  d_ = common_d(d_, y.d_);
  a_ -= y.a_;
  if (sgn(y.b_) != 0) b_ -= y.b_;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& y) {
  d_ = common_d(d_, y.d_);
  if (sgn(b_) == 0 && sgn(y.b_) == 0) {
    a_ *= y.a_;
    return *this;
  }
  // (a1 + b1 r)(a2 + b2 r) = (a1 a2 + b1 b2 d) + (a1 b2 + a2 b1) r
  Rational a = a_ * y.a_ + b_ * y.b_ * d_;
  Rational b = a_ * y.b_ + y.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& y) { return *this *= invert(y); }

double QuadScalar::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

QuadScalar invert(const QuadScalar& x) {
  if (x.is_zero()) throw std::domain_error("inversion of zero");
  const Rational& a = x.rational_part();
  const Rational& b = x.sqrt_part();
  if (sgn(b) == 0) return QuadScalar(Rational(1 / a), Rational(0), x.d());
  const Rational norm = a * a - b * b * x.d();
  return QuadScalar(Rational(a / norm), Rational(-b / norm), x.d());
}

QuadScalar abs(const QuadScalar& x) { return x.sign() < 0 ? -x : x; }

int compare(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign(); }

QuadScalar sqrt_d_power(int d, int e) {
  if (d <= 0) throw std::invalid_argument("sqrt_d_power needs d > 0");
  // d^{e/2} = d^{floor(e/2)} * (sqrt d)^{e mod 2}
  const int half = e >= 0 ? e / 2 : -((-e + 1) / 2);
  const bool odd = (e - 2 * half) != 0;
  Rational p = 1;
  Rational base = d;
  if (half < 0) base = Rational(1, d);
  for (int i = 0; i < std::abs(half); ++i) p *= base;
  p.canonicalize();
  if (!odd) return QuadScalar(p, Rational(0), d);
  return QuadScalar(Rational(0), p, d);
}

std::string format_scalar(const QuadScalar& x) { return format_scalar(x, x.d()); }

std::string format_scalar(const QuadScalar& x, int d) {
  return format_rational(x.rational_part()) + " + " + format_rational(x.sqrt_part()) +
         "*sqrt(" + std::to_string(d) + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-') {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
  }
  Rational q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace

QuadScalar parse_scalar(std::string_view text) {
  text = trim(text);
  const auto star = text.find("*sqrt(");
  if (star == std::string_view::npos) return QuadScalar(parse_rational(text));

  // Split "<a> + <b>*sqrt(<d>)" at the last " + " before the radical.
  const auto plus = text.rfind(" + ", star);
  if (plus == std::string_view::npos || text.back() != ')') {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  const Rational a = parse_rational(text.substr(0, plus));
  const Rational b = parse_rational(text.substr(plus + 3, star - plus - 3));
  const auto dtext = text.substr(star + 6, text.size() - star - 7);
  const Rational dq = parse_rational(dtext);
  if (dq.get_den() != 1 || sgn(dq) < 0 || !dq.get_num().fits_sint_p()) {
    throw std::invalid_argument("malformed radicand in '" + std::string(text) + "'");
  }
  return QuadScalar(a, b, static_cast<int>(dq.get_num().get_si()));
}

}  // namespace radial
