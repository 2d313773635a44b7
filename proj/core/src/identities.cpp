#include "pfh/identities.hpp"

#include <stdexcept>

#include "pfh/bell.hpp"
#include "pfh/harmonic.hpp"

namespace pfh {

namespace {

Rational int_pow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return Rational(r);
}

int sign_pow(unsigned exponent) { return exponent % 2 == 0 ? 1 : -1; }

long long properness(unsigned n, unsigned lambda, unsigned mu) {
  return static_cast<long long>(lambda) +
         (static_cast<long long>(lambda) - static_cast<long long>(mu)) *
             static_cast<long long>(n);
}

}  // namespace

Rational corollary_sum(unsigned n, unsigned lambda, unsigned mu) {
  if (lambda < 1) {
    throw std::domain_error("corollary_sum: lambda must be >= 1");
  }
  if (properness(n, lambda, mu) < 1) {
    throw std::domain_error("corollary_sum: hypothesis lambda + (lambda - mu) n >= 1 fails");
  }
  Rational sum(0);
  for (unsigned k = 0; k <= n; ++k) {
    sum += Rational(sign_pow(k * lambda)) * int_pow(binomial(n, k), lambda) *
           int_pow(binomial(n + k, k), mu) * omega_coeff({lambda, mu, n, k, lambda - 1});
  }
  return sum;
}

Rational corollary_expected(unsigned n, unsigned lambda, unsigned mu) {
  if (properness(n, lambda, mu) > 1) {
    return Rational(0);
  }
  // Boundary: the decomposition times x tends to the leading-coefficient
  // ratio (-1)^(mu n) (n!)^(lambda - mu) instead of zero.
  const Rational magnitude =
      Rational(factorial(n)).pow(static_cast<long>(lambda) - static_cast<long>(mu));
  return Rational(sign_pow(mu * n)) * magnitude;
}

Rational hardest_challenge_sum(unsigned n) {
  Rational sum(0);
  for (unsigned k = 0; k <= n; ++k) {
    const Rational diff = harmonic_number(k, 1) - harmonic_number(n - k, 1);
    const Rational bracket =
        Rational(3) * diff * diff + harmonic_number(k, 2) + harmonic_number(n - k, 2);
    sum += Rational(sign_pow(k)) * int_pow(binomial(n, k), 3) * bracket;
  }
  return sum;
}

Rational beukers_sum(unsigned n, ErratumMode mode) {
  if (n < 1) {
    throw std::domain_error("beukers_sum: n must be >= 1");
  }
  Rational sum(0);
  for (unsigned k = 1; k <= n; ++k) {
    const Rational kq(static_cast<long>(k));
    const Rational h_term = (mode == ErratumMode::kPrinted)
                                ? Rational(4) * harmonic_number(k, 1)
                                : Rational(4) * kq * harmonic_number(k, 1);
    const Rational bracket = Rational(1) + Rational(2) * kq * harmonic_number(n + k, 1) +
                             Rational(2) * kq * harmonic_number(n - k, 1) - h_term;
    sum += int_pow(binomial(n, k), 2) * int_pow(binomial(n + k, k), 2) * bracket;
  }
  return sum;
}

Rational example7_sum(unsigned n) {
  Rational sum(0);
  for (unsigned k = 1; k <= n; ++k) {
    const Rational kq(static_cast<long>(k));
    const Rational bracket = kq.inverse() + harmonic_number(n + k, 1) +
                             harmonic_number(n - k, 1) - Rational(2) * harmonic_number(k, 1);
    sum += kq * kq * int_pow(binomial(n, k), 2) * int_pow(binomial(n + k, k), 2) * bracket;
  }
  return sum;
}

std::pair<Rational, Rational> mixed_identity_check(Family family, unsigned n) {
  if (n < 1) {
    throw std::domain_error("mixed_identity_check: n must be >= 1");
  }
  Rational lhs(0);
  Rational rhs(0);
  switch (family) {
    case Family::kExample8:
      for (unsigned k = 1; k <= n; ++k) {
        lhs += Rational(sign_pow(k)) * Rational(binomial(2 * n, n + k)) /
               (Rational(static_cast<long>(1 + n)) * Rational(binomial(n + k, n + 1)));
      }
      for (unsigned k = 0; k <= n; ++k) {
        rhs += Rational(binomial(n, k)) * Rational(binomial(2 * n, n + k)) *
               (Rational(2) * harmonic_number(n - k, 1) - harmonic_number(k, 1) -
                harmonic_number(n + k, 1));
      }
      break;
    case Family::kExample9:
      for (unsigned k = 1; k <= n; ++k) {
        lhs += Rational(sign_pow(k)) * Rational(binomial(2 * n, n + k)) /
               int_pow(binomial(n + k, n + 1), 2);
      }
      lhs *= Rational(-2) / Rational(static_cast<long>(1 + n)).pow(2);
      for (unsigned k = 0; k <= n; ++k) {
        const Rational log1 = Rational(2) * harmonic_number(k, 1) + harmonic_number(n + k, 1) -
                              Rational(3) * harmonic_number(n - k, 1);
        const Rational log2 = Rational(2) * harmonic_number(k, 2) + harmonic_number(n + k, 2) +
                              Rational(3) * harmonic_number(n - k, 2);
        rhs += Rational(sign_pow(k)) * int_pow(binomial(n, k), 2) *
               Rational(binomial(2 * n, n + k)) * (log1 * log1 + log2);
      }
      break;
    case Family::kExample10:
      for (unsigned k = 0; k <= n; ++k) {
        const Rational log1 = harmonic_number(k, 1) + Rational(2) * harmonic_number(n + k, 1) -
                              Rational(3) * harmonic_number(n - k, 1);
        const Rational log2 = harmonic_number(k, 2) + Rational(2) * harmonic_number(n + k, 2) +
                              Rational(3) * harmonic_number(n - k, 2);
        lhs += Rational(sign_pow(k)) * Rational(binomial(n, k)) *
               int_pow(binomial(2 * n, n + k), 2) * (log1 * log1 + log2);
      }
      for (unsigned k = 1; k <= n; ++k) {
        rhs += int_pow(binomial(2 * n, n + k), 2) / Rational(binomial(n + k, n + 1)) *
               (Rational(3) * harmonic_number(n + k, 1) - harmonic_number(k - 1, 1) -
                Rational(2) * harmonic_number(n - k, 1));
      }
      rhs *= Rational(2) / Rational(static_cast<long>(1 + n));
      break;
    default:
      throw std::invalid_argument("mixed_identity_check: family must be one of the mixed ones");
  }
  return {lhs, rhs};
}

Rational theta_sum_pole_zero_term(unsigned n, unsigned theta) {
  if (theta > 3) {
    return Rational(0);  // k^(theta-3) vanishes at k = 0
  }
  // Brackets as polynomials in k with the harmonic values frozen at k = 0,
  // i.e. a_m = (-1)^m H_n^(m); the surviving contribution is the coefficient
  // of k^(3-theta) in the cubic bracket.
  const Rational t(static_cast<long>(theta));
  const Polynomial t1({t, Rational(-4) * (-harmonic_number(n, 1))});
  const Polynomial t2({t, Rational(0), Rational(-4) * harmonic_number(n, 2)});
  const Polynomial t3({t, Rational(0), Rational(0), Rational(-4) * (-harmonic_number(n, 3))});
  const Polynomial bracket = t1 * t1 * t1 - t1 * t2.scaled(Rational(3)) + t3.scaled(Rational(2));
  return bracket.coefficient(3 - theta);
}

Rational theta_sum(unsigned n, unsigned theta) {
  if (theta >= 4 + 4 * n) {
    throw std::domain_error("theta_sum: need 0 <= theta < 4 + 4n");
  }
  Rational sum = theta_sum_pole_zero_term(n, theta);
  for (unsigned k = 1; k <= n; ++k) {
    const Rational kq(static_cast<long>(k));
    const Rational t(static_cast<long>(theta));
    const Rational t1 =
        t - Rational(4) * kq * (harmonic_number(k, 1) - harmonic_number(n - k, 1));
    const Rational t2 =
        t - Rational(4) * kq * kq * (harmonic_number(k, 2) + harmonic_number(n - k, 2));
    const Rational t3 = t - Rational(4) * kq * kq * kq *
                                (harmonic_number(k, 3) - harmonic_number(n - k, 3));
    const Rational bracket = t1 * t1 * t1 + Rational(2) * t3 - Rational(3) * t1 * t2;
    sum += kq.pow(static_cast<long>(theta) - 3) * int_pow(binomial(n, k), 4) * bracket;
  }
  return sum;
}

namespace {

void push_report(SuiteResult& result, IdentityReport report) {
  report.pass = report.computed == report.expected;
  result.all_pass = result.all_pass && report.pass;
  result.reports.push_back(std::move(report));
}

void require_nonempty(const Range& r, const char* name) {
  if (r.hi < r.lo) {
    throw std::invalid_argument(std::string("run_suite: empty range for ") + name);
  }
}

}  // namespace

SuiteResult run_suite(const SuiteRequest& request) {
  SuiteResult result;
  require_nonempty(request.n, "n");
  switch (request.suite) {
    case SuiteId::kCorollary:
      require_nonempty(request.lambda, "lambda");
      require_nonempty(request.mu, "mu");
      for (long long n = request.n.lo; n <= request.n.hi; ++n) {
        for (long long lambda = request.lambda.lo; lambda <= request.lambda.hi; ++lambda) {
          for (long long mu = request.mu.lo; mu <= std::min(request.mu.hi, lambda); ++mu) {
            if (properness(static_cast<unsigned>(n), static_cast<unsigned>(lambda),
                           static_cast<unsigned>(mu)) < 1) {
              continue;
            }
            IdentityReport report;
            report.id = "corollary";
            report.params = {{"n", n}, {"lambda", lambda}, {"mu", mu}};
            report.computed = corollary_sum(static_cast<unsigned>(n),
                                            static_cast<unsigned>(lambda),
                                            static_cast<unsigned>(mu));
            report.expected = corollary_expected(static_cast<unsigned>(n),
                                                 static_cast<unsigned>(lambda),
                                                 static_cast<unsigned>(mu));
            push_report(result, std::move(report));
          }
        }
      }
      break;
    case SuiteId::kHardest:
      for (long long n = request.n.lo; n <= request.n.hi; ++n) {
        IdentityReport report;
        report.id = "hardest_challenge";
        report.params = {{"n", n}};
        report.computed = hardest_challenge_sum(static_cast<unsigned>(n));
        report.expected = Rational(0);
        push_report(result, std::move(report));
      }
      break;
    case SuiteId::kBeukers:
      for (long long n = std::max(request.n.lo, 1LL); n <= request.n.hi; ++n) {
        IdentityReport report;
        report.id = request.mode == ErratumMode::kPrinted ? "beukers_printed" : "beukers";
        report.params = {{"n", n}};
        report.computed = beukers_sum(static_cast<unsigned>(n), request.mode);
        report.expected = Rational(0);
        push_report(result, std::move(report));
      }
      break;
    case SuiteId::kExample7:
      for (long long n = request.n.lo; n <= request.n.hi; ++n) {
        IdentityReport report;
        report.id = "example7";
        report.params = {{"n", n}};
        report.computed = example7_sum(static_cast<unsigned>(n));
        report.expected = Rational(n) * Rational(n + 1);
        push_report(result, std::move(report));
      }
      break;
    case SuiteId::kMixed:
      for (long long n = std::max(request.n.lo, 1LL); n <= request.n.hi; ++n) {
        const auto [lhs, rhs] = mixed_identity_check(request.family, static_cast<unsigned>(n));
        IdentityReport report;
        report.id = request.family == Family::kExample8   ? "example8"
                    : request.family == Family::kExample9 ? "example9"
                                                          : "example10";
        report.params = {{"n", n}};
        report.computed = lhs;
        report.expected = rhs;
        push_report(result, std::move(report));
      }
      break;
    case SuiteId::kTheta:
      for (long long n = request.n.lo; n <= request.n.hi; ++n) {
        const long long theta_hi =
            request.theta_full_range ? 3 + 4 * n : std::min(request.theta.hi, 3 + 4 * n);
        const long long theta_lo = request.theta_full_range ? 0 : request.theta.lo;
        for (long long theta = theta_lo; theta <= theta_hi; ++theta) {
          IdentityReport report;
          report.id = "theta";
          report.params = {{"n", n}, {"theta", theta}};
          report.computed = theta_sum(static_cast<unsigned>(n), static_cast<unsigned>(theta));
          report.expected = (theta == 3 + 4 * n)
                                ? Rational(6) * Rational(factorial(static_cast<unsigned>(n))).pow(4)
                                : Rational(0);
          push_report(result, std::move(report));
        }
      }
      break;
  }
  if (result.reports.empty()) {
    throw std::invalid_argument("run_suite: the requested ranges produce no cases");
  }
  return result;
}

}  // namespace pfh
