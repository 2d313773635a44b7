#include <doctest.h>

#include <random>

#include "pfh/rational.hpp"

using pfh::binomial;
using pfh::factorial;
using pfh::Integer;
using pfh::Rational;
using pfh::rising_factorial;

namespace {

// Random rationals with small components, deterministic seed.
Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  return Rational(num(rng), den(rng));
}

bool is_canonical(const Rational& q) {
  if (q.denominator() <= 0) {
    return false;
  }
  Integer g;
  const Integer n = abs(q.numerator());
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), q.denominator().get_mpz_t());
  if (q.numerator() == 0) {
    return q.denominator() == 1;
  }
  return g == 1;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-2, 1), std::domain_error);
}

TEST_CASE("binomial symmetry up to 60") {
  for (long long n = 0; n <= 60; ++n) {
    for (long long k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n, n - k));
    }
  }
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(Rational(1), 4) == Rational(24));
  CHECK(rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(rising_factorial(Rational(-3), 5) == Rational(0));
  CHECK(rising_factorial(Rational(7, 3), 0) == Rational(1));
}

TEST_CASE("rising factorial reproduces factorials") {
  for (unsigned n = 0; n <= 60; ++n) {
    CHECK(rising_factorial(Rational(1), n) == Rational(factorial(n)));
  }
}

TEST_CASE("rising factorial splits multiplicatively") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational c = random_rational(rng);
    const unsigned m = rng() % 21;
    const unsigned n = rng() % 21;
    const Rational shifted = c + Rational(static_cast<long>(m));
    CHECK(rising_factorial(c, m + n) ==
          rising_factorial(c, m) * rising_factorial(shifted, n));
  }
}

TEST_CASE("rationals stay canonical under arithmetic") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    CHECK(is_canonical(a + b));
    CHECK(is_canonical(a - b));
    CHECK(is_canonical(a * b));
    if (!b.is_zero()) {
      CHECK(is_canonical(a / b));
    }
  }
  CHECK(is_canonical(Rational(4, -6)));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(0, 7).denominator() == 1);
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(0).pow(-2), std::domain_error);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("string forms") {
  CHECK(Rational(-2, 3).to_string() == "-2/3");
  CHECK(Rational(6, 1).to_string() == "6");
  CHECK(Rational::from_string("25/12") == Rational(25, 12));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(pfh::to_string(pfh::parse_integer("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(pfh::parse_integer("12x"), std::invalid_argument);
}

TEST_CASE("integer powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-5).pow(0) == Rational(1));
}
