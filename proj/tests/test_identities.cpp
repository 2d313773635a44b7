#include <doctest.h>

#include "pfh/bell.hpp"
#include "pfh/harmonic.hpp"
#include "pfh/identities.hpp"
#include "pfh/pfd.hpp"

using pfh::beukers_sum;
using pfh::corollary_expected;
using pfh::corollary_sum;
using pfh::ErratumMode;
using pfh::example7_sum;
using pfh::Family;
using pfh::FamilyParams;
using pfh::hardest_challenge_sum;
using pfh::mixed_identity_check;
using pfh::Rational;
using pfh::run_suite;
using pfh::SuiteId;
using pfh::SuiteRequest;
using pfh::theta_sum;

TEST_CASE("corollary sums") {
  CHECK(corollary_sum(1, 2, 0) == Rational(0));
  CHECK(corollary_sum(2, 1, 1) == Rational(1));  // boundary, (-1)^2
  CHECK(corollary_sum(3, 1, 1) == Rational(-1));
  CHECK(corollary_sum(2, 3, 1) == Rational(0));
  CHECK(corollary_expected(2, 1, 1) == Rational(1));
  CHECK(corollary_expected(4, 3, 2) == Rational(0));
  CHECK_THROWS_AS(corollary_sum(1, 1, 3), std::domain_error);
  CHECK_THROWS_AS(corollary_sum(1, 0, 0), std::domain_error);
}

TEST_CASE("cubic-binomial identity vanishes") {
  CHECK(hardest_challenge_sum(0) == Rational(0));
  CHECK(hardest_challenge_sum(1) == Rational(0));
  CHECK(hardest_challenge_sum(7) == Rational(0));
}

// The printed bracket is one third of the ell = 2 coefficient at (3, 0);
// both routes must agree term by term, not just in the total.
TEST_CASE("cubic-binomial bracket against the coefficient route") {
  for (unsigned n = 0; n <= 10; ++n) {
    Rational bracket_route(0);
    for (unsigned k = 0; k <= n; ++k) {
      const Rational diff =
          pfh::harmonic_number(k, 1) - pfh::harmonic_number(n - k, 1);
      const Rational bracket = Rational(3) * diff * diff + pfh::harmonic_number(k, 2) +
                               pfh::harmonic_number(n - k, 2);
      CHECK(Rational(3) * bracket == pfh::omega_coeff({3, 0, n, k, 2}));
      bracket_route += Rational((k % 2 == 0) ? 1 : -1) *
                       Rational(pfh::binomial(n, k)).pow(3) * bracket;
    }
    CHECK(bracket_route == hardest_challenge_sum(n));
  }
}

TEST_CASE("beukers sums") {
  CHECK(beukers_sum(1, ErratumMode::kPrinted) == Rational(0));
  CHECK(beukers_sum(1, ErratumMode::kCorrected) == Rational(0));
  CHECK(beukers_sum(2, ErratumMode::kCorrected) == Rational(0));
  CHECK(beukers_sum(2, ErratumMode::kPrinted) == Rational(216));
  CHECK_THROWS_AS(beukers_sum(0, ErratumMode::kCorrected), std::domain_error);
}

TEST_CASE("example7 sums") {
  CHECK(example7_sum(0) == Rational(0));
  CHECK(example7_sum(1) == Rational(2));
  CHECK(example7_sum(2) == Rational(6));
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(example7_sum(n) == Rational(static_cast<long>(n)) * Rational(static_cast<long>(n + 1)));
  }
}

TEST_CASE("mixed identities") {
  const auto [lhs8, rhs8] = mixed_identity_check(Family::kExample8, 1);
  CHECK(lhs8 == Rational(-1, 2));
  CHECK(rhs8 == Rational(-1, 2));

  for (unsigned n = 1; n <= 8; ++n) {
    for (const Family family : {Family::kExample8, Family::kExample9, Family::kExample10}) {
      const auto [lhs, rhs] = mixed_identity_check(family, n);
      CAPTURE(static_cast<int>(family));
      CAPTURE(n);
      CHECK(lhs == rhs);
    }
  }
  CHECK_THROWS_AS(mixed_identity_check(Family::kBeukers6, 2), std::invalid_argument);
  CHECK_THROWS_AS(mixed_identity_check(Family::kExample8, 0), std::domain_error);
}

TEST_CASE("theta sums") {
  CHECK(theta_sum(0, 3) == Rational(6));
  CHECK(theta_sum(1, 0) == Rational(0));
  CHECK(theta_sum(1, 7) == Rational(6));
  for (unsigned n = 0; n <= 3; ++n) {
    for (unsigned theta = 0; theta <= 2 + 4 * n; ++theta) {
      CAPTURE(n);
      CAPTURE(theta);
      CHECK(theta_sum(n, theta) == Rational(0));
    }
    CHECK(theta_sum(n, 3 + 4 * n) == Rational(6) * Rational(pfh::factorial(n)).pow(4));
  }
  CHECK_THROWS_AS(theta_sum(1, 8), std::domain_error);
}

// Every identity is the residue bookkeeping of its decomposition; tie the
// two views together over a small n range.
TEST_CASE("identities against decomposition residues") {
  for (unsigned n = 1; n <= 6; ++n) {
    // theorem rows
    for (unsigned lambda = 1; lambda <= 4; ++lambda) {
      for (unsigned mu = 0; mu <= lambda; ++mu) {
        FamilyParams params;
        params.family = Family::kTheorem;
        params.n = n;
        params.lambda = lambda;
        params.mu = mu;
        const Rational residues = pfh::theorem_decompose(n, lambda, mu).residue_sum();
        CHECK(residues * Rational(pfh::factorial(lambda - 1)) == corollary_sum(n, lambda, mu));
        CHECK(residues == pfh::residue_sum_expected(pfh::build_family_spec(params)));
      }
    }

    // the cubed-binomial identity is the (3, 0) row, scaled by 3/2
    CHECK(pfh::theorem_decompose(n, 3, 0).residue_sum() ==
          Rational(3, 2) * hardest_challenge_sum(n));

    // beukers6: residues sum to the 1/x term plus the vanishing identity
    {
      FamilyParams params;
      params.family = Family::kBeukers6;
      params.n = n;
      const Rational residues = pfh::example_decompose(params).residue_sum();
      CHECK(residues == Rational(1) + beukers_sum(n, ErratumMode::kCorrected));
    }

    // example7: the simple-pole total is -2 n(n+1)
    {
      FamilyParams params;
      params.family = Family::kExample7;
      params.n = n;
      const Rational residues = pfh::example_decompose(params).residue_sum();
      CHECK(residues == Rational(-2) * example7_sum(n));
      CHECK(residues == pfh::residue_sum_expected(pfh::build_family_spec(params)));
    }

    // the two-sided identities are residue balances
    for (const Family family : {Family::kExample8, Family::kExample9, Family::kExample10}) {
      FamilyParams params;
      params.family = family;
      params.n = n;
      const auto [lhs, rhs] = mixed_identity_check(family, n);
      const Rational residues = pfh::example_decompose(params).residue_sum();
      Rational balance;
      switch (family) {
        case Family::kExample8:
          balance = lhs - rhs;
          break;
        case Family::kExample9:
          balance = (rhs - lhs) / Rational(2);
          break;
        default:
          balance = (lhs - rhs) / Rational(2);
          break;
      }
      CHECK(residues == balance);
      CHECK(residues.is_zero());
    }
  }

  // theta: residue total is (-1)^(theta+1) theta_sum / 6
  for (unsigned n = 0; n <= 4; ++n) {
    for (unsigned theta = 0; theta <= 3 + 4 * n; ++theta) {
      FamilyParams params;
      params.family = Family::kTheta;
      params.n = n;
      params.theta = theta;
      const Rational residues = pfh::example_decompose(params).residue_sum();
      const Rational sign((theta % 2 == 0) ? -1 : 1);
      CAPTURE(n);
      CAPTURE(theta);
      CHECK(residues == sign * theta_sum(n, theta) / Rational(6));
      CHECK(residues == pfh::residue_sum_expected(pfh::build_family_spec(params)));
    }
  }
}

TEST_CASE("suite runner") {
  SuiteRequest corollary;
  corollary.suite = SuiteId::kCorollary;
  corollary.n = {1, 5};
  corollary.lambda = {2, 3};
  corollary.mu = {0, 3};
  const auto result = run_suite(corollary);
  CHECK(result.all_pass);
  CHECK(!result.reports.empty());

  SuiteRequest beukers_printed;
  beukers_printed.suite = SuiteId::kBeukers;
  beukers_printed.n = {2, 2};
  beukers_printed.mode = ErratumMode::kPrinted;
  const auto printed = run_suite(beukers_printed);
  CHECK(!printed.all_pass);
  REQUIRE(printed.reports.size() == 1);
  CHECK(printed.reports[0].computed == Rational(216));
  CHECK(printed.reports[0].expected == Rational(0));

  SuiteRequest beukers_ok = beukers_printed;
  beukers_ok.mode = ErratumMode::kCorrected;
  beukers_ok.n = {1, 10};
  CHECK(run_suite(beukers_ok).all_pass);

  SuiteRequest theta;
  theta.suite = SuiteId::kTheta;
  theta.n = {0, 2};
  CHECK(run_suite(theta).all_pass);

  SuiteRequest empty;
  empty.suite = SuiteId::kHardest;
  empty.n = {5, 2};
  CHECK_THROWS_AS(run_suite(empty), std::invalid_argument);
}
