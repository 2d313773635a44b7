#include <doctest.h>

#include <vector>

#include "pfh/harmonic.hpp"
#include "pfh/parallel.hpp"

using pfh::HarmonicCache;
using pfh::harmonic_number;
using pfh::punctured_harmonic_sum;
using pfh::Rational;
using pfh::shifted_harmonic_sum;

TEST_CASE("generalized harmonic numbers") {
  CHECK(harmonic_number(0, 3) == Rational(0));
  CHECK(harmonic_number(4, 1) == Rational(25, 12));
  CHECK(harmonic_number(2, 2) == Rational(5, 4));
  CHECK_THROWS_AS(harmonic_number(3, 0), std::domain_error);
}

TEST_CASE("cache agrees with recomputation") {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 0; n <= 20; ++n) {
      CHECK(harmonic_number(n, m) == HarmonicCache::recompute(n, m));
    }
  }
}

TEST_CASE("shifted harmonic sum") {
  CHECK(shifted_harmonic_sum(1, Rational(-1), 2) == Rational(5, 6));
  CHECK(shifted_harmonic_sum(1, Rational(-1), 2) ==
        harmonic_number(3, 1) - harmonic_number(1, 1));
  CHECK(shifted_harmonic_sum(1, Rational(1, 2), 1) == Rational(2));
  CHECK(shifted_harmonic_sum(2, Rational(0), 3) == Rational(49, 36));
  CHECK_THROWS_AS(shifted_harmonic_sum(1, Rational(2), 3), std::domain_error);
}

TEST_CASE("punctured harmonic sum") {
  CHECK(punctured_harmonic_sum(1, Rational(-1), 2, 1) == Rational(0));
  CHECK(punctured_harmonic_sum(2, Rational(0), 3, 0) == Rational(49, 36));
  CHECK(punctured_harmonic_sum(1, Rational(1, 2), 1, 0) == Rational(2, 3));
  CHECK_THROWS_AS(punctured_harmonic_sum(1, Rational(-2), 3, 1), std::domain_error);
  CHECK_THROWS_AS(punctured_harmonic_sum(1, Rational(0), 3, 5), std::domain_error);
}

TEST_CASE("cache serves concurrent workers consistently") {
  const std::size_t count = 256;
  std::vector<Rational> parallel_values(count);
  pfh::parallel_for(
      count,
      [&](std::size_t i) {
        const unsigned n = static_cast<unsigned>((37 * i) % 60);
        const unsigned m = 1 + static_cast<unsigned>(i % 5);
        parallel_values[i] = harmonic_number(n, m);
      },
      4);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned n = static_cast<unsigned>((37 * i) % 60);
    const unsigned m = 1 + static_cast<unsigned>(i % 5);
    CHECK(parallel_values[i] == HarmonicCache::recompute(n, m));
  }
}

// The two substitution identities the whole coefficient machinery rests on:
// H_ell(-k) = H_{n+k} - H_k and the punctured sum at -k equals
// H_{n-k} + (-1)^ell H_k, exactly, over the full triangle.
TEST_CASE("substitution identities over the (n, k) triangle") {
  for (unsigned n = 0; n <= 30; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const Rational minus_k(-static_cast<long>(k));
      for (unsigned ell = 1; ell <= 5; ++ell) {
        CHECK(shifted_harmonic_sum(ell, minus_k, n) ==
              harmonic_number(n + k, ell) - harmonic_number(k, ell));
        const Rational sign = (ell % 2 == 0) ? Rational(1) : Rational(-1);
        CHECK(punctured_harmonic_sum(ell, minus_k, n, k) ==
              harmonic_number(n - k, ell) + sign * harmonic_number(k, ell));
      }
    }
  }
}
