#include <doctest.h>

#include <random>

#include "pfh/polynomial.hpp"

using pfh::Polynomial;
using pfh::Rational;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> coeffs;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) {
    coeffs.emplace_back(coeff(rng));
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("polynomial basics") {
  const Polynomial p({Rational(1), Rational(0), Rational(-2)});  // 1 - 2x^2
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(Rational(3)) == Rational(-17));
  CHECK(p.coefficient(1) == Rational(0));
  CHECK(p.coefficient(7) == Rational(0));

  CHECK(Polynomial().is_zero());
  CHECK(Polynomial({Rational(0), Rational(0)}).is_zero());
  CHECK(Polynomial::constant(Rational(0)).degree() == -1);
  CHECK(Polynomial::monomial(Rational(1), 3).degree() == 3);
}

TEST_CASE("arithmetic keeps leading coefficients nonzero") {
  const Polynomial a({Rational(1), Rational(2)});
  const Polynomial b({Rational(5), Rational(-2)});
  CHECK((a + b).degree() == 0);  // the x terms cancel
  CHECK((a - a).is_zero());
  CHECK((a * Polynomial()).is_zero());
}

TEST_CASE("division reconstructs the dividend") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial dividend = random_poly(rng, 8);
    Polynomial divisor = random_poly(rng, 4);
    if (divisor.is_zero()) {
      divisor = Polynomial::constant(Rational(1));
    }
    const auto [quotient, remainder] = dividend.divmod(divisor);
    CHECK(dividend == quotient * divisor + remainder);
    CHECK(remainder.degree() < divisor.degree());
  }
  CHECK_THROWS_AS(Polynomial::constant(Rational(1)).divmod(Polynomial()), std::domain_error);
}
