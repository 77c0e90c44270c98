#include <random>

#include "doctest.h"
#include "radial/scalar.hpp"

using namespace radial;

namespace {

QuadScalar Q(long a_num, long a_den, long b_num, long b_den, int d) {
  return QuadScalar(make_rational(a_num, a_den), make_rational(b_num, b_den), d);
}

QuadScalar random_scalar(std::mt19937& rng, int d) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return Q(num(rng), den(rng), num(rng), den(rng), d);
}

}  // namespace

TEST_CASE("field examples for d = 3") {
  const QuadScalar r = Q(0, 1, 1, 1, 3);
  CHECK(r * r == QuadScalar(3));
  CHECK(invert(r) == Q(0, 1, 1, 3, 3));
  CHECK((QuadScalar(1) + QuadScalar(-1)).is_zero());
  CHECK_THROWS_AS(invert(QuadScalar()), std::domain_error);
}

TEST_CASE("sqrt_d_power examples") {
  CHECK(sqrt_d_power(3, 2) == QuadScalar(3));
  CHECK(sqrt_d_power(3, -1) == Q(0, 1, 1, 3, 3));
  CHECK(sqrt_d_power(3, 0) == QuadScalar(1));
  CHECK(sqrt_d_power(3, 3) == Q(0, 1, 3, 1, 3));
  CHECK(sqrt_d_power(3, -4) == Q(1, 9, 0, 1, 3));
}

TEST_CASE("sqrt_d_power is a homomorphism on [-6, 6]") {
  for (int d : {3, 5, 9}) {
    for (int e1 = -6; e1 <= 6; ++e1) {
      for (int e2 = -6; e2 <= 6; ++e2) {
        CHECK(sqrt_d_power(d, e1) * sqrt_d_power(d, e2) == sqrt_d_power(d, e1 + e2));
      }
    }
  }
}

TEST_CASE("perfect-square radicand folds into the rational part") {
  const QuadScalar r = sqrt_d_power(9, 1);
  CHECK(r.is_rational());
  CHECK(r == QuadScalar(3));
  CHECK(Q(1, 1, 2, 1, 9) == QuadScalar(7));
}

TEST_CASE("field laws on random scalars") {
  std::mt19937 rng(42);
  for (int d : {3, 5}) {
    for (int i = 0; i < 300; ++i) {
      const auto x = random_scalar(rng, d);
      const auto y = random_scalar(rng, d);
      const auto z = random_scalar(rng, d);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x - x).is_zero());
      if (!x.is_zero()) CHECK(x * invert(x) == QuadScalar(1));
    }
  }
}

TEST_CASE("exact sign agrees with floating point away from zero") {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_scalar(rng, 3);
    const double v = x.to_double();
    if (std::abs(v) > 1e-9) CHECK(x.sign() == (v > 0 ? 1 : -1));
  }
  CHECK(Q(2, 1, -1, 1, 3).sign() == 1);   // 2 - 1.732
  CHECK(Q(-2, 1, 1, 1, 3).sign() == -1);
  CHECK(Q(1, 1, -1, 1, 3).sign() == -1);  // 1 - 1.732
  CHECK(compare(QuadScalar(1), sqrt_d_power(3, 1)) < 0);
  CHECK(abs(Q(1, 1, -1, 1, 3)) == Q(-1, 1, 1, 1, 3));
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS_AS(sqrt_d_power(3, 1) + sqrt_d_power(5, 1), std::invalid_argument);
  CHECK(QuadScalar(2) * sqrt_d_power(5, 1) == Q(0, 1, 2, 1, 5));
}

TEST_CASE("serialization") {
  CHECK(format_scalar(Q(1, 3, -2, 4, 3)) == "1/3 + -1/2*sqrt(3)");
  CHECK(format_scalar(QuadScalar(), 3) == "0/1 + 0/1*sqrt(3)");
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_scalar(rng, 5);
    CHECK(parse_scalar(format_scalar(x)) == x);
  }
  CHECK(parse_scalar("7/2") == QuadScalar(make_rational(7, 2)));
  CHECK_THROWS_AS(parse_scalar("1/3 + x*sqrt(3)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
}
