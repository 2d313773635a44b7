#ifndef PFH_IDENTITIES_HPP
#define PFH_IDENTITIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "pfh/pfd.hpp"
#include "pfh/rational.hpp"

namespace pfh {

// One evaluated identity instance. pass holds exactly when computed and
// expected agree as rationals.
struct IdentityReport {
  std::string id;
  std::vector<std::pair<std::string, long long>> params;
  Rational computed;
  Rational expected;
  bool pass = false;
};

// sum_k (-1)^(k lambda) C(n,k)^lambda C(n+k,k)^mu Omega_{lambda-1}(lambda,mu,-k).
// Zero whenever lambda + (lambda - mu) n > 1; the boundary case
// lambda + (lambda - mu) n = 1 evaluates to (-1)^(mu n) (n!)^(lambda - mu),
// which for lambda = mu = 1 is the classical (-1)^n. Arguments with
// lambda + (lambda - mu) n < 1 are rejected.
Rational corollary_sum(unsigned n, unsigned lambda, unsigned mu);
Rational corollary_expected(unsigned n, unsigned lambda, unsigned mu);

// sum_k (-1)^k C(n,k)^3 {3 (H_k - H_{n-k})^2 + H_k^(2) + H_{n-k}^(2)},
// implemented from the printed bracket; vanishes for every n.
Rational hardest_challenge_sum(unsigned n);

// sum_{k=1..n} C(n,k)^2 C(n+k,k)^2 {1 + 2k H_{n+k} + 2k H_{n-k} - 4 H_k}
// as printed, or with the final term corrected to -4k H_k. The corrected
// mode vanishes; the printed one does not for n >= 2.
Rational beukers_sum(unsigned n, ErratumMode mode);

// sum_{k=1..n} k^2 C(n,k)^2 C(n+k,k)^2 {1/k + H_{n+k} + H_{n-k} - 2 H_k},
// equal to n (n + 1).
Rational example7_sum(unsigned n);

// Both sides of the printed two-sided identities of the mixed-denominator
// families (kExample8/9/10 only). first = lhs, second = rhs as printed.
std::pair<Rational, Rational> mixed_identity_check(Family family, unsigned n);

// sum_k k^(theta-3) C(n,k)^4 {cubic bracket}; the k = 0 term is the formal
// limit of the summand (see theta_sum_pole_zero_term). Equals 0 for
// 0 <= theta <= 2 + 4n and 6 (n!)^4 at theta = 3 + 4n.
Rational theta_sum(unsigned n, unsigned theta);

// The k = 0 contribution to theta_sum: the prefactor k^(theta-3) is
// indeterminate against the vanishing bracket, and the value that makes the
// printed formula an identity is the constant term of the expansion of
// k^(theta-3) * bracket(k) around k = 0 with the harmonic values frozen at
// k = 0.
Rational theta_sum_pole_zero_term(unsigned n, unsigned theta);

enum class SuiteId { kCorollary, kHardest, kBeukers, kExample7, kMixed, kTheta };

struct Range {
  long long lo = 0;
  long long hi = 0;
  bool contains(long long v) const { return lo <= v && v <= hi; }
};

struct SuiteRequest {
  SuiteId suite = SuiteId::kCorollary;
  Range n{1, 1};
  Range lambda{1, 5};       // corollary
  Range mu{0, 5};           // corollary, clipped to mu <= lambda
  ErratumMode mode = ErratumMode::kCorrected;  // beukers
  Family family = Family::kExample8;           // mixed
  bool theta_full_range = true;                // theta: run theta in [0, 3+4n]
  Range theta{0, 0};                           // used when !theta_full_range
};

struct SuiteResult {
  std::vector<IdentityReport> reports;
  bool all_pass = true;
};

// Runs one identity suite over its parameter ranges in deterministic order.
// Empty ranges are usage errors.
SuiteResult run_suite(const SuiteRequest& request);

}  // namespace pfh

#endif  // PFH_IDENTITIES_HPP
